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
Classical word and tree automata, and their distributed counterparts.

On dipaths, forgetful distributed automata recognize exactly the regular
languages: dfa_to_forgetful() and forgetful_to_dfa() convert both ways.
On ordered ditrees they can simulate every bottom-up tree automaton
(tree_to_forgetful()), and more: balanced_example() accepts exactly the
binary ditrees that are NOT perfectly balanced.
"""

import logging
from collections import deque
from itertools import product
from typing import (
    Any, Dict, FrozenSet, Hashable, Iterable, Iterator, List, Mapping,
    Optional, Sequence, Tuple,
)

from .automata import (
    DistributedAutomaton, Neighborhood, TableAutomaton, UnsupportedShapeError,
    fresh_state, is_forgetful, ordered, tabulate,
)
from .graphs import (
    UNLABELED, DigraphBuilder, InvalidGraphError, PointedDigraph, Symbol,
    classify,
)


__all__ = [
    'WordAutomaton', 'TreeAutomaton', 'InvalidClassicalAutomatonError',
    'word_run', 'word_of', 'dfa_to_forgetful', 'forgetful_to_dfa',
    'tree_accepts', 'tree_to_forgetful', 'balanced_example',
    'is_perfectly_balanced', 'enumerate_ordered_binary_ditrees',
]

logger = logging.getLogger(__name__)


class InvalidClassicalAutomatonError(ValueError):
    """
    Raised for malformed word or tree automata, and for symbols outside of
    their alphabet.
    """


class WordAutomaton:
    """
    A complete deterministic finite automaton on words.
    """
    __slots__ = 'states', 'alphabet', 'initial', 'transitions', 'accepting'

    def __init__(self, states: Iterable[Hashable], alphabet: Iterable[Symbol],
                 initial: Hashable,
                 transitions: Mapping[Tuple[Hashable, Symbol], Hashable],
                 accepting: Iterable[Hashable]) -> None:
        self.states = frozenset(states)
        self.alphabet = tuple(alphabet)
        self.initial = initial
        self.transitions = dict(transitions)
        self.accepting = frozenset(accepting)

        if self.initial not in self.states:
            raise InvalidClassicalAutomatonError('initial state is not a state')
        if not self.accepting <= self.states:
            raise InvalidClassicalAutomatonError('accepting states must be states')
        for p in self.states:
            for sigma in self.alphabet:
                target = self.transitions.get((p, sigma))
                if target is None:
                    raise InvalidClassicalAutomatonError(
                        f'missing transition for {p!r} on {sigma!r}'
                    )
                if target not in self.states:
                    raise InvalidClassicalAutomatonError(
                        f'transition target {target!r} is not a state'
                    )

    def run(self, word: Iterable[Symbol]) -> Hashable:
        """
        The state reached after reading word.
        """
        p = self.initial
        for sigma in word:
            try:
                p = self.transitions[p, sigma]
            except KeyError:
                raise InvalidClassicalAutomatonError(
                    f'symbol {sigma!r} is not in the alphabet'
                )
        return p

    def __eq__(self, other) -> bool:
        return (isinstance(other, WordAutomaton)
                and self.states == other.states
                and set(self.alphabet) == set(other.alphabet)
                and self.initial == other.initial
                and self.transitions == other.transitions
                and self.accepting == other.accepting)

    def __repr__(self) -> str:
        return (f"WordAutomaton(states={ordered(self.states)!r}, "
                f"alphabet={self.alphabet!r}, initial={self.initial!r})")


def word_run(w: WordAutomaton, word: Iterable[Symbol]) -> bool:
    """
    >>> w = WordAutomaton('pq', 'ab', 'p',
    ...                   {('p', 'a'): 'q', ('q', 'a'): 'q',
    ...                    ('p', 'b'): 'p', ('q', 'b'): 'p'}, 'q')
    >>> word_run(w, 'ba'), word_run(w, 'ab')
    (True, False)
    """
    return w.run(word) in w.accepting


def word_of(pg: PointedDigraph) -> Tuple[Symbol, ...]:
    """
    The word spelled by a dipath pointed at its last node.
    """
    shape = classify(pg.graph)
    if not shape.is_dipath or shape.root != pg.point:
        raise InvalidGraphError('not a dipath pointed at its last node')
    g = pg.graph
    word = [g.labels[pg.point]]
    node = pg.point
    while g.incoming(node, 1):
        node, = g.incoming(node, 1)
        word.append(g.labels[node])
    return tuple(reversed(word))


def dfa_to_forgetful(w: WordAutomaton) -> TableAutomaton:
    """
    A forgetful 1-relational automaton accepting the dipath of a word iff w
    accepts the word. Every node waits in a fresh state until its
    predecessor has settled, then settles on the state w reaches there.
    """
    waiting = fresh_state(w.states, 'o')

    def delta(sigma: Symbol, _q: Any, neighborhood: Neighborhood) -> Any:
        n, = neighborhood
        if not n:
            return w.transitions[w.initial, sigma]
        if len(n) == 1:
            p, = n
            if p != waiting:
                return w.transitions[p, sigma]
        return waiting

    return tabulate(w.states | {waiting}, 1, w.alphabet, waiting, delta,
                    w.accepting, name='dfa')


def forgetful_to_dfa(a: DistributedAutomaton) -> WordAutomaton:
    """
    Subset construction: after the i-th symbol, the word automaton is in
    the set of states that a visits at the i-th node of the dipath.
    Only reachable subsets are built.
    """
    if a.relation_count != 1:
        raise UnsupportedShapeError('word automata correspond to r = 1')
    if not is_forgetful(a):
        raise UnsupportedShapeError(f'{a.name} is not forgetful')

    current = ordered(a.initial_states)[0]
    empty: FrozenSet[Any] = frozenset()

    def eta(p: FrozenSet[Any], sigma: Symbol) -> FrozenSet[Any]:
        if not p:
            reached = {a.transition(sigma, current, (empty,))}
        else:
            reached = {a.transition(sigma, current, (frozenset({q}),))
                       for q in p}
        return frozenset(reached | {a.initial_state(sigma)})

    transitions: Dict[Tuple[FrozenSet[Any], Symbol], FrozenSet[Any]] = {}
    seen = {empty}
    pending = deque([empty])
    while pending:
        p = pending.popleft()
        for sigma in a.alphabet:
            target = transitions[p, sigma] = eta(p, sigma)
            if target not in seen:
                seen.add(target)
                pending.append(target)
    logger.debug('Subset construction for %s: %d states', a.name, len(seen))

    accepting = [p for p in seen if any(a.is_accepting(q) for q in p)]
    return WordAutomaton(seen, a.alphabet, empty, transitions, accepting)


class TreeAutomaton:
    """
    A complete deterministic bottom-up automaton on ordered trees whose
    nodes have at most rank children. transitions maps (child states, σ) to
    a state; leaves use the empty tuple.
    """
    __slots__ = 'states', 'rank', 'alphabet', 'transitions', 'accepting'

    def __init__(self, states: Iterable[Hashable], rank: int,
                 alphabet: Iterable[Symbol],
                 transitions: Mapping[Tuple[Tuple[Hashable, ...], Symbol], Hashable],
                 accepting: Iterable[Hashable]) -> None:
        self.states = frozenset(states)
        self.rank = rank
        self.alphabet = tuple(alphabet)
        self.transitions = dict(transitions)
        self.accepting = frozenset(accepting)

        if rank < 1:
            raise InvalidClassicalAutomatonError('rank must be positive')
        if not self.accepting <= self.states:
            raise InvalidClassicalAutomatonError('accepting states must be states')
        for k in range(rank + 1):
            for children in product(ordered(self.states), repeat=k):
                for sigma in self.alphabet:
                    target = self.transitions.get((children, sigma))
                    if target is None:
                        raise InvalidClassicalAutomatonError(
                            f'missing transition for {children!r} on {sigma!r}'
                        )
                    if target not in self.states:
                        raise InvalidClassicalAutomatonError(
                            f'transition target {target!r} is not a state'
                        )

    def __eq__(self, other) -> bool:
        return (isinstance(other, TreeAutomaton)
                and self.states == other.states
                and self.rank == other.rank
                and set(self.alphabet) == set(other.alphabet)
                and self.transitions == other.transitions
                and self.accepting == other.accepting)

    def __repr__(self) -> str:
        return (f"TreeAutomaton(states={ordered(self.states)!r}, "
                f"rank={self.rank!r}, alphabet={self.alphabet!r})")


def _children(pg: PointedDigraph, node: int) -> List[int]:
    g = pg.graph
    children = []
    for k in range(1, g.relation_count + 1):
        incoming = g.incoming(node, k)
        if not incoming:
            break
        child, = incoming
        children.append(child)
    return children


def _bottom_up(pg: PointedDigraph) -> List[int]:
    """
    Nodes of an ordered ditree, children before parents.
    """
    shape = classify(pg.graph)
    if not shape.is_ordered or shape.root != pg.point:
        raise InvalidGraphError('expected an ordered ditree rooted at the point')
    order = []
    pending = [pg.point]
    while pending:
        node = pending.pop()
        order.append(node)
        pending.extend(_children(pg, node))
    return order[::-1]


def tree_accepts(ta: TreeAutomaton, pg: PointedDigraph) -> bool:
    if pg.relation_count != ta.rank:
        raise InvalidGraphError(f'expected {ta.rank} relations')
    state: Dict[int, Hashable] = {}
    labels = pg.graph.labels
    for node in _bottom_up(pg):
        children = tuple(state[child] for child in _children(pg, node))
        try:
            state[node] = ta.transitions[children, labels[node]]
        except KeyError:
            raise InvalidClassicalAutomatonError(
                f'symbol {labels[node]!r} is not in the alphabet'
            )
    return state[pg.point] in ta.accepting


def tree_to_forgetful(ta: TreeAutomaton) -> TableAutomaton:
    """
    A forgetful automaton that evaluates ta bottom-up: a node waits until
    its children have settled, then settles on the state ta assigns to it.
    """
    waiting = fresh_state(ta.states, 'o')

    def delta(sigma: Symbol, _q: Any, neighborhood: Neighborhood) -> Any:
        children = []
        for n in neighborhood:
            if not n:
                break
            if len(n) > 1 or waiting in n:
                return waiting
            p, = n
            children.append(p)
        # Children must occupy relations 1..k without gaps.
        if any(neighborhood[len(children):]):
            return waiting
        return ta.transitions[tuple(children), sigma]

    return tabulate(ta.states | {waiting}, ta.rank, ta.alphabet, waiting,
                    delta, ta.accepting, name='tree')


def balanced_example() -> TableAutomaton:
    """
    A forgetful automaton on unlabeled ordered binary ditrees that accepts
    exactly the trees that are not perfectly balanced. Finished subtrees
    report f; a node that sees a finished and an unfinished subtree (or a
    report of imbalance) reports a.
    """
    o, f, a = 'o', 'f', 'a'
    finished = (frozenset(), frozenset({f}))

    def delta(_sigma: Symbol, _q: Any, neighborhood: Neighborhood) -> Any:
        left, right = neighborhood
        if left == right == frozenset({o}):
            return o
        if left in finished and right in finished:
            return f
        return a

    return tabulate((o, f, a), 2, (UNLABELED,), o, delta, (a,),
                    name='unbalanced')


def is_perfectly_balanced(pg: PointedDigraph) -> bool:
    """
    True iff, at every node, both subtrees have the same height (a missing
    subtree has height -1).
    """
    if pg.relation_count != 2:
        raise InvalidGraphError('expected a binary (2-relational) ditree')
    height: Dict[int, int] = {}
    for node in _bottom_up(pg):
        heights = [height[child] for child in _children(pg, node)]
        heights += [-1] * (2 - len(heights))
        if heights[0] != heights[1]:
            return False
        height[node] = heights[0] + 1
    return True


Shape = Tuple[Any, ...]


def _shapes(max_nodes: int) -> List[List[Shape]]:
    # shapes[n] lists every ordered tree with n nodes, each node having at
    # most two children.
    shapes: List[List[Shape]] = [[], [()]]
    for n in range(2, max_nodes + 1):
        current = [(child,) for child in shapes[n - 1]]
        for left_size in range(1, n - 1):
            current.extend((left, right)
                           for left in shapes[left_size]
                           for right in shapes[n - 1 - left_size])
        shapes.append(current)
    return shapes


def _ditree_of_shape(shape: Shape) -> PointedDigraph:
    builder = DigraphBuilder(2)
    root = builder.add_node(UNLABELED)
    pending = [(root, shape)]
    while pending:
        node, children = pending.pop()
        for k, child in enumerate(children, start=1):
            child_node = builder.add_node(UNLABELED)
            builder.add_edge(k, child_node, node)
            pending.append((child_node, child))
    return builder.build(root)


def enumerate_ordered_binary_ditrees(max_nodes: int
                                     ) -> Iterator[PointedDigraph]:
    """
    Every unlabeled ordered binary ditree with at most max_nodes nodes,
    pointed at its root.

    >>> [sum(1 for _ in enumerate_ordered_binary_ditrees(n)) for n in (1, 3, 5)]
    [1, 4, 17]
    """
    shapes = _shapes(max_nodes)
    for n in range(1, max_nodes + 1):
        for shape in shapes[n]:
            yield _ditree_of_shape(shape)
