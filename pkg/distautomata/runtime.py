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
Synchronous runs of distributed automata.

All nodes start in their initial state; in every round, every node reads the
sets of states of its incoming neighbors (one set per relation) and moves to
its next state. A pointed digraph is accepted when its point visits an
accepting state in some round.
"""

import logging
from typing import (
    Any, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union,
)

from .automata import DistributedAutomaton, Neighborhood
from .graphs import Digraph, PointedDigraph
from .settings import Budget, BudgetExceededError, resolve


__all__ = [
    'Configuration', 'RunTrace', 'AcceptanceVerdict',
    'IncompatibleInputError',
    'initial_configuration', 'step', 'run', 'trace', 'accepts_within',
    'decide_acceptance', 'visited_state_sequence', 'accepting_nodes',
]

logger = logging.getLogger(__name__)

GraphLike = Union[Digraph, PointedDigraph]


class IncompatibleInputError(ValueError):
    """
    Raised when a digraph cannot be fed to an automaton.
    """


class Configuration(NamedTuple):
    # assignment[v] is the state of node v.
    assignment: Tuple[Any, ...]
    round: int


class AcceptanceVerdict(NamedTuple):
    accepted: bool
    accepting_round: Optional[int] = None
    # When rejected: the run repeats from cycle_start with this period.
    cycle_start: Optional[int] = None
    cycle_length: Optional[int] = None


def _graph(g: GraphLike) -> Digraph:
    return g.graph if isinstance(g, PointedDigraph) else g


def _check_compatible(a: DistributedAutomaton, g: Digraph) -> None:
    if a.relation_count != g.relation_count:
        raise IncompatibleInputError(
            f'{a.name} reads {a.relation_count} relations, '
            f'the digraph has {g.relation_count}'
        )
    unknown = set(g.labels) - set(a.alphabet)
    if unknown:
        raise IncompatibleInputError(
            f'labels {sorted(unknown)} are not in the alphabet of {a.name}'
        )


def initial_configuration(a: DistributedAutomaton,
                          g: GraphLike) -> Configuration:
    graph = _graph(g)
    _check_compatible(a, graph)
    return Configuration(tuple(a.initial_state(label)
                               for label in graph.labels), 0)


def neighborhood_of(g: Digraph, assignment: Sequence[Any],
                    node: int) -> Neighborhood:
    """
    The per-relation sets of states of node's incoming neighbors.
    """
    return tuple(frozenset(assignment[u] for u in g.incoming(node, k))
                 for k in range(1, g.relation_count + 1))


def step(a: DistributedAutomaton, g: GraphLike,
         c: Configuration) -> Configuration:
    graph = _graph(g)
    assignment = c.assignment
    return Configuration(tuple(
        a.transition(graph.labels[v], assignment[v],
                     neighborhood_of(graph, assignment, v))
        for v in graph.nodes
    ), c.round + 1)


def run(a: DistributedAutomaton, g: GraphLike) -> Iterator[Configuration]:
    """
    The (infinite) run of a on g.
    """
    c = initial_configuration(a, g)
    while True:
        yield c
        c = step(a, g, c)


class RunTrace:
    """
    The first rounds of a run.
    """
    __slots__ = 'graph', 'automaton', 'configurations'

    def __init__(self, graph: PointedDigraph, automaton: DistributedAutomaton,
                 configurations: Sequence[Configuration]) -> None:
        self.graph = graph
        self.automaton = automaton
        self.configurations: Tuple[Configuration, ...] = tuple(configurations)

    @property
    def rounds(self) -> int:
        return len(self.configurations) - 1

    def states_at(self, node: int) -> List[Any]:
        return [c.assignment[node] for c in self.configurations]

    @property
    def accepted_at(self) -> Optional[int]:
        """
        The first round in which the point is accepting, if any.
        """
        for c in self.configurations:
            if self.automaton.is_accepting(c.assignment[self.graph.point]):
                return c.round
        return None

    def __repr__(self) -> str:
        return (f"RunTrace(automaton={self.automaton.name!r}, "
                f"nodes={self.graph.node_count}, rounds={self.rounds})")


def trace(a: DistributedAutomaton, pg: PointedDigraph,
          rounds: int) -> RunTrace:
    if rounds < 0:
        raise ValueError('rounds must be non-negative')
    configurations = []
    for c in run(a, pg):
        configurations.append(c)
        if c.round == rounds:
            break
    return RunTrace(pg, a, configurations)


def accepts_within(a: DistributedAutomaton, pg: PointedDigraph,
                   rounds: int) -> bool:
    for c in run(a, pg):
        if a.is_accepting(c.assignment[pg.point]):
            return True
        if c.round >= rounds:
            return False
    raise AssertionError('unreachable')


def visited_state_sequence(a: DistributedAutomaton, pg: PointedDigraph,
                           rounds: int) -> List[Any]:
    """
    The states of the point in rounds 0..rounds.
    """
    return trace(a, pg, rounds).states_at(pg.point)


def decide_acceptance(a: DistributedAutomaton, pg: PointedDigraph,
                      budget: Optional[Budget] = None) -> AcceptanceVerdict:
    """
    Decides acceptance exactly by running until the point accepts or the
    global configuration repeats.
    """
    limit = resolve(budget).max_configurations
    seen: Dict[Tuple[Any, ...], int] = {}
    for c in run(a, pg):
        if a.is_accepting(c.assignment[pg.point]):
            return AcceptanceVerdict(True, accepting_round=c.round)
        start = seen.get(c.assignment)
        if start is not None:
            logger.debug('Run of %s repeats from round %d with period %d',
                         a.name, start, c.round - start)
            return AcceptanceVerdict(False, cycle_start=start,
                                     cycle_length=c.round - start)
        if len(seen) >= limit:
            logger.warning('No repetition within %d configurations', limit)
            raise BudgetExceededError('distinct configurations', limit)
        seen[c.assignment] = c.round
    raise AssertionError('unreachable')


def accepting_nodes(a: DistributedAutomaton, g: GraphLike,
                    max_rounds: Optional[int] = None,
                    budget: Optional[Budget] = None) -> Dict[int, int]:
    """
    Maps every node that accepts (as the point) to its first accepting
    round. Without max_rounds, the run is followed until it repeats.
    """
    limit = resolve(budget).max_configurations
    graph = _graph(g)
    first: Dict[int, int] = {}
    seen: set = set()
    for c in run(a, graph):
        for v in graph.nodes:
            if v not in first and a.is_accepting(c.assignment[v]):
                first[v] = c.round
        if len(first) == graph.node_count:
            break
        if max_rounds is not None and c.round >= max_rounds:
            break
        if c.assignment in seen:
            break
        if len(seen) >= limit:
            raise BudgetExceededError('distinct configurations', limit)
        seen.add(c.assignment)
    return first
