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
Emptiness of forgetful distributed automata.

For a forgetful automaton, the set S_t of states that the point of SOME
digraph can be in at round t depends only on S_{t-1}:

    S_0 = initial states
    S_t = Γ(S_{t-1}) = { δ_σ(T_1, ..., T_r) : σ ∈ Σ, T_k ⊆ S_{t-1} }

The sequence is eventually periodic, so the automaton accepts some pointed
digraph iff one of the finitely many distinct S_t meets F. Witnesses are
assembled round by round from disjoint copies of smaller witnesses.

This module also holds brute-force searches used to cross-check the decider
(and to probe automata that are not forgetful).
"""

import logging
from enum import Enum
from typing import (
    Any, Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple,
)

from .automata import (
    DistributedAutomaton, Neighborhood, UnsupportedShapeError, is_forgetful,
    neighborhoods, ordered,
)
from .graphs import (
    DigraphBuilder, PointedDigraph, Symbol, enumerate_digraphs,
    enumerate_dipaths,
)
from .runtime import accepting_nodes, accepts_within, visited_state_sequence
from .settings import Budget, resolve


__all__ = [
    'Verdict', 'ReachableSets', 'EmptinessVerdict', 'InconsistentHitError',
    'gamma', 'reachable_sets', 'forgetful_empty', 'forgetful_witness',
    'bounded_search', 'dipath_search',
]

logger = logging.getLogger(__name__)

StateSet = FrozenSet[Any]


class InconsistentHitError(ValueError):
    """
    Raised when asked to realize a state that is not reachable at a round.
    """


class Verdict(Enum):
    EMPTY = 'empty'
    NONEMPTY = 'nonempty'


class ReachableSets(NamedTuple):
    # The distinct sets S_0 .. S_{preperiod + period - 1}.
    sets: Tuple[StateSet, ...]
    preperiod: int
    period: int

    def at(self, t: int) -> StateSet:
        """
        S_t, for any t.
        """
        if t < len(self.sets):
            return self.sets[t]
        return self.sets[self.preperiod + (t - self.preperiod) % self.period]


class EmptinessVerdict(NamedTuple):
    verdict: Verdict
    first_hit_round: Optional[int] = None
    hit_state: Any = None
    witness: Optional[PointedDigraph] = None

    @property
    def is_empty(self) -> bool:
        return self.verdict is Verdict.EMPTY


def _require_forgetful(a: DistributedAutomaton,
                       budget: Optional[Budget]) -> None:
    if not is_forgetful(a, budget):
        raise UnsupportedShapeError(f'{a.name} is not forgetful')


def _arbitrary_state(a: DistributedAutomaton) -> Any:
    # Forgetful transitions ignore the current state.
    return ordered(a.initial_states)[0]


def _realizations(a: DistributedAutomaton, s: StateSet):
    """
    Every (σ, T⃗, δ_σ(T⃗)) with T⃗ drawn from subsets of s.
    """
    current = _arbitrary_state(a)
    for sigma in a.alphabet:
        for n in neighborhoods(s, a.relation_count):
            yield sigma, n, a.transition(sigma, current, n)


def _gamma(a: DistributedAutomaton, s: StateSet) -> StateSet:
    return frozenset(target for _sigma, _n, target in _realizations(a, s))


def gamma(a: DistributedAutomaton, s: StateSet,
          budget: Optional[Budget] = None) -> StateSet:
    """
    The one-step image of s: every δ_σ(T⃗) with each T_k ⊆ s.
    """
    _require_forgetful(a, budget)
    return _gamma(a, frozenset(s))


def reachable_sets(a: DistributedAutomaton,
                   budget: Optional[Budget] = None) -> ReachableSets:
    """
    Iterates Γ from S_0 until a set repeats.
    """
    _require_forgetful(a, budget)
    sets: List[StateSet] = []
    index: Dict[StateSet, int] = {}
    current = frozenset(a.initial_states)
    while current not in index:
        index[current] = len(sets)
        sets.append(current)
        logger.debug('S_%d = %s', len(sets) - 1, ordered(current))
        current = _gamma(a, current)
    preperiod = index[current]
    return ReachableSets(tuple(sets), preperiod, len(sets) - preperiod)


def forgetful_empty(a: DistributedAutomaton, with_witness: bool = True,
                    budget: Optional[Budget] = None) -> EmptinessVerdict:
    """
    Decides whether a forgetful automaton accepts no pointed digraph at all.
    """
    sequence = reachable_sets(a, budget)
    for t, s in enumerate(sequence.sets):
        hits = [q for q in ordered(s) if a.is_accepting(q)]
        if not hits:
            continue
        q = hits[0]
        logger.info('%s accepts in round %d (state %r)', a.name, t, q)
        witness = None
        if with_witness:
            witness = _witness(a, sequence, t, q)
            assert visited_state_sequence(a, witness, t)[t] == q
        return EmptinessVerdict(Verdict.NONEMPTY, t, q, witness)
    logger.info('%s is empty', a.name)
    return EmptinessVerdict(Verdict.EMPTY)


def forgetful_witness(a: DistributedAutomaton, t: int, q: Any,
                      budget: Optional[Budget] = None) -> PointedDigraph:
    """
    A pointed digraph whose point is in state q at round t.
    """
    if t < 0:
        raise InconsistentHitError(f'negative round {t}')
    return _witness(a, reachable_sets(a, budget), t, q)


def _witness(a: DistributedAutomaton, sequence: ReachableSets,
             t: int, q: Any) -> PointedDigraph:
    if q not in sequence.at(t):
        raise InconsistentHitError(f'{q!r} is not reachable in round {t}')

    cache: Dict[Tuple[int, Any], PointedDigraph] = {}

    def realize(round: int, state: Any) -> PointedDigraph:
        if (round, state) in cache:
            return cache[round, state]
        builder = DigraphBuilder(a.relation_count)
        if round == 0:
            sigma = next(sigma for sigma in a.alphabet
                         if a.initial_state(sigma) == state)
            point = builder.add_node(sigma)
        else:
            previous = sequence.at(round - 1)
            sigma, n = _first_realization(a, previous, state)
            point = builder.add_node(sigma)
            for p in ordered(frozenset().union(*n)):
                copy = builder.add_copy(realize(round - 1, p))
                for k, states in enumerate(n, start=1):
                    if p in states:
                        builder.add_edge(k, copy, point)
        pg = cache[round, state] = builder.build(point)
        return pg

    witness = realize(t, q)
    logger.debug('Witness for %r at round %d has %d nodes',
                 q, t, witness.node_count)
    return witness


def _first_realization(a: DistributedAutomaton, s: StateSet,
                       q: Any) -> Tuple[Symbol, Neighborhood]:
    # Fewest distinct neighbor states: fewest copies in the witness.
    candidates = [(len(frozenset().union(*n)), index, sigma, n)
                  for index, (sigma, n, target)
                  in enumerate(_realizations(a, s)) if target == q]
    if not candidates:
        raise InconsistentHitError(f'{q!r} is not in Γ({ordered(s)})')
    _size, _index, sigma, n = min(candidates, key=lambda c: c[:2])
    return sigma, n


def bounded_search(a: DistributedAutomaton,
                   max_nodes: Optional[int] = None,
                   max_rounds: Optional[int] = None,
                   budget: Optional[Budget] = None
                   ) -> Optional[PointedDigraph]:
    """
    The first enumerated pointed digraph with at most max_nodes nodes that
    is accepted within max_rounds rounds.
    """
    limits = resolve(budget)
    max_nodes = limits.max_nodes if max_nodes is None else max_nodes
    max_rounds = limits.max_rounds if max_rounds is None else max_rounds
    examined = 0
    for g in enumerate_digraphs(a.alphabet, a.relation_count, max_nodes):
        examined += 1
        accepted = accepting_nodes(a, g, max_rounds, budget)
        if accepted:
            logger.info('Found accepted digraph after %d candidates', examined)
            return PointedDigraph(g, min(accepted))
    logger.info('No accepted digraph among %d candidates', examined)
    return None


def dipath_search(a: DistributedAutomaton,
                  max_len: Optional[int] = None,
                  max_rounds: Optional[int] = None,
                  budget: Optional[Budget] = None
                  ) -> Optional[Tuple[Sequence[Symbol], PointedDigraph]]:
    """
    The shortest dipath accepted within max_rounds rounds, with its word.
    """
    if a.relation_count != 1:
        raise UnsupportedShapeError('dipaths are 1-relational')
    limits = resolve(budget)
    max_len = limits.max_length if max_len is None else max_len
    max_rounds = limits.max_rounds if max_rounds is None else max_rounds
    for pg in enumerate_dipaths(a.alphabet, max_len):
        if accepts_within(a, pg, max_rounds):
            return pg.graph.labels, pg
    return None
