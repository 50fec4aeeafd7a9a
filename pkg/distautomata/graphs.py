#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

# Copyright 2026 The distautomata developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Labeled, multi-relational digraphs: the inputs of distributed automata.

Nodes are the integers 0..n-1; relations are numbered 1..r. An edge (u, v) in
relation k means that u is an incoming k-neighbor of v.

>>> g = make_digraph(2, 1, [[(0, 1)]], ['a', 'b'])
>>> g
Digraph(node_count=2, relation_count=1, edges=[(1, 0, 1)], labels=('a', 'b'))
>>> g.incoming(1, 1)
(0,)
>>> classify(g).is_dipath
True
"""

import logging
from itertools import product
from typing import (
    Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional,
    Sequence, Tuple,
)


__all__ = [
    'UNLABELED',
    'Digraph', 'PointedDigraph', 'GraphClass', 'DigraphBuilder',
    'InvalidGraphError',
    'make_digraph', 'classify', 'dipath_of_word', 'tree_unravel',
    'enumerate_digraphs', 'enumerate_pointed_digraphs', 'enumerate_dipaths',
    'without_node',
]

logger = logging.getLogger(__name__)

# The single symbol of an unlabeled alphabet.
UNLABELED = '_'

Symbol = str
Edge = Tuple[int, int]


class InvalidGraphError(ValueError):
    """
    Raised when a digraph (or a pointed digraph) is malformed, or when an
    operation receives a graph outside of its domain.
    """


class Digraph:
    """
    A finite, nonempty, Σ-labeled, r-relational directed graph.

    Instances are immutable; construct them with make_digraph() or
    DigraphBuilder.
    """
    __slots__ = 'node_count', 'relation_count', 'edges', 'labels', '_incoming'

    def __init__(self, node_count: int, relation_count: int,
                 edges: Sequence[FrozenSet[Edge]],
                 labels: Sequence[Symbol]) -> None:
        self.node_count = node_count
        self.relation_count = relation_count
        self.edges: Tuple[FrozenSet[Edge], ...] = tuple(edges)
        self.labels: Tuple[Symbol, ...] = tuple(labels)

        incoming: List[List[List[int]]] = [
            [[] for _ in range(node_count)] for _ in range(relation_count)
        ]
        for index, relation in enumerate(self.edges):
            for u, v in relation:
                incoming[index][v].append(u)
        self._incoming = tuple(
            tuple(tuple(sorted(preds)) for preds in per_node)
            for per_node in incoming
        )

    @property
    def nodes(self) -> range:
        return range(self.node_count)

    def relation(self, k: int) -> FrozenSet[Edge]:
        """
        The edge set E_k (1-based).
        """
        return self.edges[k - 1]

    def incoming(self, node: int, k: int) -> Tuple[int, ...]:
        """
        Incoming k-neighbors of node, in ascending order.
        """
        return self._incoming[k - 1][node]

    def edge_list(self) -> List[Tuple[int, int, int]]:
        """
        Every edge as (k, u, v), sorted.
        """
        return sorted((k, u, v)
                      for k, relation in enumerate(self.edges, start=1)
                      for u, v in relation)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Digraph)
                and self.node_count == other.node_count
                and self.relation_count == other.relation_count
                and self.edges == other.edges
                and self.labels == other.labels)

    def __hash__(self) -> int:
        return hash((self.node_count, self.relation_count,
                     self.edges, self.labels))

    def __repr__(self) -> str:
        return (f"Digraph(node_count={self.node_count!r}, "
                f"relation_count={self.relation_count!r}, "
                f"edges={self.edge_list()!r}, labels={self.labels!r})")


def make_digraph(node_count: int, relation_count: int,
                 edge_lists: Sequence[Iterable[Edge]],
                 labels: Sequence[Symbol]) -> Digraph:
    """
    Validates and builds a digraph. Duplicate edges are merged.

    >>> make_digraph(1, 1, [[]], ['a']).node_count
    1
    """
    if node_count < 1:
        raise InvalidGraphError('a digraph needs at least one node')
    if relation_count < 1:
        raise InvalidGraphError('a digraph needs at least one relation')
    if len(edge_lists) != relation_count:
        raise InvalidGraphError(f'expected {relation_count} edge lists, '
                                f'got {len(edge_lists)}')
    if len(labels) != node_count or any(label is None for label in labels):
        raise InvalidGraphError('every node needs a label')

    edges = []
    for k, edge_list in enumerate(edge_lists, start=1):
        relation = set()
        for u, v in edge_list:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise InvalidGraphError(
                    f'edge ({u}, {v}) in relation {k} is out of range'
                )
            relation.add((u, v))
        edges.append(frozenset(relation))
    return Digraph(node_count, relation_count, edges, labels)


class _PointedDigraph(NamedTuple):
    graph: Digraph
    point: int


class PointedDigraph(_PointedDigraph):
    """
    A digraph with a distinguished node.
    """
    __slots__ = ()

    def __new__(cls, graph: Digraph, point: int) -> 'PointedDigraph':
        if not 0 <= point < graph.node_count:
            raise InvalidGraphError(f'point {point} is not a node')
        return super().__new__(cls, graph, point)  # type: ignore

    @property
    def label(self) -> Symbol:
        return self.graph.labels[self.point]

    @property
    def node_count(self) -> int:
        return self.graph.node_count

    @property
    def relation_count(self) -> int:
        return self.graph.relation_count


class GraphClass(NamedTuple):
    is_ditree: bool
    root: Optional[int]
    is_ordered: bool
    is_dipath: bool


NOT_A_DITREE = GraphClass(is_ditree=False, root=None,
                          is_ordered=False, is_dipath=False)


def classify(g: Digraph) -> GraphClass:
    """
    Decides whether g is a ditree (all edges point towards a unique root),
    an ordered ditree, or a dipath.

    >>> classify(make_digraph(2, 1, [[(0, 1), (1, 0)]], ['a', 'a'])).is_ditree
    False
    """
    # Relations of a ditree are pairwise disjoint.
    seen: set = set()
    for relation in g.edges:
        if seen & relation:
            return NOT_A_DITREE
        seen |= relation

    successor: Dict[int, int] = {}
    for u, v in seen:
        if u in successor:
            return NOT_A_DITREE
        successor[u] = v

    roots = [node for node in g.nodes if node not in successor]
    if len(roots) != 1:
        return NOT_A_DITREE
    root, = roots

    reaches_root = {root}
    for node in g.nodes:
        path = []
        current = node
        while current not in reaches_root:
            if current in path:
                return NOT_A_DITREE
            path.append(current)
            current = successor[current]
        reaches_root.update(path)

    is_ordered = True
    for node in g.nodes:
        for k in range(1, g.relation_count + 1):
            count = len(g.incoming(node, k))
            if count > 1:
                is_ordered = False
            if k > 1 and count > 0 and not g.incoming(node, k - 1):
                is_ordered = False

    return GraphClass(is_ditree=True, root=root, is_ordered=is_ordered,
                      is_dipath=is_ordered and g.relation_count == 1)


class DigraphBuilder:
    """
    Incrementally assembles a digraph.

    >>> builder = DigraphBuilder(relation_count=1)
    >>> leaf = builder.add_node('a')
    >>> root = builder.add_node('b')
    >>> builder.add_edge(1, leaf, root)
    >>> builder.build(root).graph.labels
    ('a', 'b')
    """

    def __init__(self, relation_count: int) -> None:
        self.relation_count = relation_count
        self._labels: List[Symbol] = []
        self._edges: List[List[Edge]] = [[] for _ in range(relation_count)]

    @property
    def node_count(self) -> int:
        return len(self._labels)

    def add_node(self, label: Symbol) -> int:
        self._labels.append(label)
        return len(self._labels) - 1

    def add_edge(self, k: int, u: int, v: int) -> None:
        if not 1 <= k <= self.relation_count:
            raise InvalidGraphError(f'no relation {k}')
        self._edges[k - 1].append((u, v))

    def add_copy(self, pg: PointedDigraph) -> int:
        """
        Adds a disjoint copy of pg; returns the copy of its point.
        """
        if pg.relation_count != self.relation_count:
            raise InvalidGraphError('relation count mismatch')
        offset = self.node_count
        self._labels.extend(pg.graph.labels)
        for k, u, v in pg.graph.edge_list():
            self._edges[k - 1].append((u + offset, v + offset))
        return pg.point + offset

    def build_graph(self) -> Digraph:
        return make_digraph(self.node_count, self.relation_count,
                            self._edges, self._labels)

    def build(self, point: int) -> PointedDigraph:
        return PointedDigraph(self.build_graph(), point)


def dipath_of_word(word: Sequence[Symbol]) -> PointedDigraph:
    """
    The dipath spelling word, pointed at its last node.

    >>> dipath_of_word('ab').graph.edge_list()
    [(1, 0, 1)]
    """
    if len(word) == 0:
        raise InvalidGraphError('dipaths have at least one node')
    n = len(word)
    edges = [(i, i + 1) for i in range(n - 1)]
    return PointedDigraph(make_digraph(n, 1, [edges], list(word)), n - 1)


def tree_unravel(pg: PointedDigraph, depth: int) -> PointedDigraph:
    """
    Unravels pg into a ditree of the given height rooted at a copy of the
    point. Every incoming neighbor, per relation, becomes a fresh child.

    >>> loop = PointedDigraph(make_digraph(1, 1, [[(0, 0)]], ['a']), 0)
    >>> tree_unravel(loop, 2).graph.edge_list()
    [(1, 1, 0), (1, 2, 1)]
    """
    if depth < 0:
        raise ValueError('depth must be non-negative')
    g = pg.graph
    builder = DigraphBuilder(g.relation_count)
    root = builder.add_node(g.labels[pg.point])
    frontier = [(root, pg.point)]
    for level in range(depth):
        next_frontier = []
        for copy, original in frontier:
            for k in range(1, g.relation_count + 1):
                for neighbor in g.incoming(original, k):
                    child = builder.add_node(g.labels[neighbor])
                    builder.add_edge(k, child, copy)
                    next_frontier.append((child, neighbor))
        if not next_frontier:
            break
        frontier = next_frontier
    return builder.build(root)


def enumerate_digraphs(alphabet: Sequence[Symbol], relation_count: int,
                       max_nodes: int) -> Iterator[Digraph]:
    """
    Every digraph with at most max_nodes nodes, ordered by node count, then
    labeling, then the edge bitmask of each relation. Isomorphic copies are
    not merged.

    >>> sum(1 for _ in enumerate_digraphs('a', 1, 2))
    18
    """
    if max_nodes < 1:
        raise ValueError('max_nodes must be at least 1')
    for n in range(1, max_nodes + 1):
        pairs = [(u, v) for u in range(n) for v in range(n)]
        masks = range(1 << len(pairs))
        count = 0
        for labels in product(alphabet, repeat=n):
            for chosen in product(masks, repeat=relation_count):
                edges = [
                    frozenset(pair for bit, pair in enumerate(pairs)
                              if mask >> bit & 1)
                    for mask in chosen
                ]
                count += 1
                yield Digraph(n, relation_count, edges, labels)
        logger.debug('Enumerated %d digraphs with %d nodes', count, n)


def enumerate_pointed_digraphs(alphabet: Sequence[Symbol],
                               relation_count: int,
                               max_nodes: int) -> Iterator[PointedDigraph]:
    """
    As enumerate_digraphs(), with every choice of point.

    >>> sum(1 for _ in enumerate_pointed_digraphs('ab', 1, 1))
    4
    """
    for g in enumerate_digraphs(alphabet, relation_count, max_nodes):
        for point in g.nodes:
            yield PointedDigraph(g, point)


def enumerate_dipaths(alphabet: Sequence[Symbol],
                      max_len: int) -> Iterator[PointedDigraph]:
    """
    The dipath of every word of length 1..max_len, shortest first.

    >>> sum(1 for _ in enumerate_dipaths('ab', 2))
    6
    """
    if max_len < 1:
        raise ValueError('max_len must be at least 1')
    for length in range(1, max_len + 1):
        for word in product(alphabet, repeat=length):
            yield dipath_of_word(word)


def without_node(pg: PointedDigraph, node: int) -> PointedDigraph:
    """
    Removes a node (and its edges) from pg, renumbering the rest.
    """
    g = pg.graph
    if node == pg.point:
        raise InvalidGraphError('cannot remove the point')
    if not 0 <= node < g.node_count:
        raise InvalidGraphError(f'{node} is not a node')

    def renumber(n: int) -> int:
        return n if n < node else n - 1

    edges = [
        [(renumber(u), renumber(v)) for u, v in relation
         if node not in (u, v)]
        for relation in g.edges
    ]
    labels = [label for n, label in enumerate(g.labels) if n != node]
    return PointedDigraph(
        make_digraph(g.node_count - 1, g.relation_count, edges, labels),
        renumber(pg.point)
    )
