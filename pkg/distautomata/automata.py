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
Deterministic distributed automata and their structural properties.

An automaton runs the same finite-state machine on every node of a digraph.
In each round a node moves to δ_σ(q, N_1, ..., N_r), where σ is its label,
q its current state and N_k the SET of states of its incoming k-neighbors.

Two backings are provided: TableAutomaton enumerates δ completely;
RuleAutomaton evaluates δ by calling a pure function, optionally declaring
its finite state universe and a successor relation.

>>> a = tabulate(['q'], 1, 'a', 'q', lambda sigma, q, n: 'q', ['q'])
>>> a.transition('a', 'q', (frozenset({'q'}),))
'q'
>>> is_forgetful(a), is_quasi_acyclic(a)
(True, True)
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from itertools import chain, combinations, product as cartesian_product
from typing import (
    Any, Callable, Dict, FrozenSet, Hashable, Iterable, Iterator, Mapping,
    NamedTuple, Optional, Sequence, Tuple, Union,
)

import networkx as nx

from .graphs import Symbol
from .settings import Budget, BudgetExceededError, resolve


__all__ = [
    'Backing', 'Mode',
    'DistributedAutomaton', 'TableAutomaton', 'RuleAutomaton',
    'StateDiagram', 'ProductState',
    'InvalidAutomatonError', 'UnsupportedShapeError',
    'make_table_automaton', 'tabulate', 'all_subsets', 'neighborhoods',
    'state_key', 'fresh_state',
    'is_forgetful', 'is_monovisioned', 'monovisionize',
    'state_diagram', 'is_quasi_acyclic', 'product',
]

logger = logging.getLogger(__name__)

State = Hashable
Neighborhood = Tuple[FrozenSet[State], ...]
Initialization = Union[State, Mapping[Symbol, State]]
TransitionFunction = Callable[[Symbol, Any, Neighborhood], Any]


class InvalidAutomatonError(ValueError):
    """
    Raised when an automaton is not well-formed (partial transition table,
    states outside of Q, mismatched alphabets, ...).
    """


class UnsupportedShapeError(ValueError):
    """
    Raised when an operation's structural precondition does not hold; e.g.,
    it requires a forgetful or a 1-relational automaton.
    """


class Backing(Enum):
    TABLE = 'table'
    RULE = 'rule'


class Mode(Enum):
    UNION = 'union'
    INTERSECTION = 'intersection'


def state_key(state: Any) -> str:
    """
    A deterministic sort key for states of any shape.

    >>> state_key(frozenset({2, 1}))
    '{1,2}'
    """
    if isinstance(state, frozenset):
        return '{' + ','.join(sorted(state_key(s) for s in state)) + '}'
    if isinstance(state, tuple):
        inner = ','.join(state_key(s) for s in state)
        return f'{type(state).__name__}({inner})'
    return repr(state)


def ordered(states: Iterable[State]) -> Tuple[State, ...]:
    return tuple(sorted(states, key=state_key))


def all_subsets(states: Iterable[State]) -> Iterator[FrozenSet[State]]:
    """
    Every subset, smallest first.

    >>> [sorted(s) for s in all_subsets([1, 2])]
    [[], [1], [2], [1, 2]]
    """
    items = ordered(states)
    return (frozenset(c) for c in chain.from_iterable(
        combinations(items, size) for size in range(len(items) + 1)
    ))


def neighborhoods(states: Iterable[State],
                  relation_count: int) -> Iterator[Neighborhood]:
    """
    Every r-tuple of subsets of states.
    """
    subsets = list(all_subsets(states))
    return cartesian_product(subsets, repeat=relation_count)


def fresh_state(states: Iterable[State], base: str) -> str:
    """
    A name based on base that does not occur in states.

    >>> fresh_state(['rej', "rej'"], 'rej')
    "rej''"
    """
    taken = set(states)
    name = base
    while name in taken:
        name += "'"
    return name


class DistributedAutomaton(ABC):
    """
    A deterministic distributed automaton.
    """

    backing: Backing
    relation_count: int
    alphabet: Tuple[Symbol, ...]
    name: str

    @abstractmethod
    def initial_state(self, label: Symbol) -> State:
        """
        The state a node labeled with label starts in.
        """

    @abstractmethod
    def transition(self, label: Symbol, state: State,
                   neighborhood: Neighborhood) -> State: ...

    @abstractmethod
    def is_accepting(self, state: State) -> bool: ...

    @property
    def states(self) -> Optional[FrozenSet[State]]:
        """
        The declared state universe, if known.
        """
        return None

    @property
    def initial_states(self) -> FrozenSet[State]:
        return frozenset(self.initial_state(sigma) for sigma in self.alphabet)

    def successors(self, state: State) -> Optional[FrozenSet[State]]:
        """
        States reachable from state in one step, or None when unknown.
        """
        universe = self.states
        if universe is None:
            return None
        return frozenset(
            self.transition(sigma, state, n)
            for sigma in self.alphabet
            for n in neighborhoods(universe, self.relation_count)
        )

    def domain_size(self) -> Optional[int]:
        """
        |Q| · 2^(|Q| r) · |Σ|, when Q is known.
        """
        universe = self.states
        if universe is None:
            return None
        q = len(universe)
        return q * 2 ** (q * self.relation_count) * len(self.alphabet)

    def __repr__(self) -> str:
        return (f"{type(self).__name__}(name={self.name!r}, "
                f"relation_count={self.relation_count!r}, "
                f"alphabet={self.alphabet!r})")


class TableAutomaton(DistributedAutomaton):
    """
    An automaton whose transition function is fully tabulated.
    """

    backing = Backing.TABLE

    def __init__(self, states: Iterable[State], relation_count: int,
                 alphabet: Iterable[Symbol], init: Initialization,
                 table: Mapping[Tuple[Symbol, State, Neighborhood], State],
                 accepting: Iterable[State], name: str = 'table') -> None:
        self._states = frozenset(states)
        self.relation_count = relation_count
        self.alphabet = tuple(alphabet)
        self.accepting = frozenset(accepting)
        self.name = name
        self.table: Dict[Tuple[Symbol, State, Neighborhood], State] = dict(table)

        if isinstance(init, Mapping):
            self.init: Optional[State] = None
            self.init_map: Optional[Dict[Symbol, State]] = dict(init)
        else:
            self.init = init
            self.init_map = None

        self._validate()

        successors: Dict[State, set] = {q: set() for q in self._states}
        for (_sigma, q, _n), target in self.table.items():
            successors[q].add(target)
        self._successors = {q: frozenset(s) for q, s in successors.items()}

    def _validate(self) -> None:
        if not self._states:
            raise InvalidAutomatonError('an automaton needs at least one state')
        if self.relation_count < 1:
            raise InvalidAutomatonError('an automaton needs a relation')
        if not self.alphabet:
            raise InvalidAutomatonError('the alphabet is empty')
        if not self.accepting <= self._states:
            raise InvalidAutomatonError(
                f'accepting states {ordered(self.accepting - self._states)} '
                'are not states'
            )
        if self.init_map is not None:
            missing = set(self.alphabet) - set(self.init_map)
            if missing:
                raise InvalidAutomatonError(
                    f'no initial state for labels {sorted(missing)}'
                )
            initials = set(self.init_map.values())
        else:
            initials = {self.init}
        if not initials <= self._states:
            raise InvalidAutomatonError('initial state is not a state')

        for sigma in self.alphabet:
            for q in self._states:
                for n in neighborhoods(self._states, self.relation_count):
                    try:
                        target = self.table[sigma, q, n]
                    except KeyError:
                        raise InvalidAutomatonError(
                            f'missing transition for label {sigma!r}, '
                            f'state {q!r}, neighbors {[sorted(map(state_key, s)) for s in n]}'
                        )
                    if target not in self._states:
                        raise InvalidAutomatonError(
                            f'transition target {target!r} is not a state'
                        )

    @property
    def states(self) -> FrozenSet[State]:
        return self._states

    @property
    def is_simplified(self) -> bool:
        return self.init_map is not None

    def initial_state(self, label: Symbol) -> State:
        if self.init_map is not None:
            return self.init_map[label]
        return self.init

    def transition(self, label: Symbol, state: State,
                   neighborhood: Neighborhood) -> State:
        return self.table[label, state, neighborhood]

    def is_accepting(self, state: State) -> bool:
        return state in self.accepting

    def successors(self, state: State) -> FrozenSet[State]:
        return self._successors[state]


def make_table_automaton(states: Iterable[State], relation_count: int,
                         alphabet: Iterable[Symbol], init: Initialization,
                         transition_entries: Iterable[Tuple[Symbol, State, Sequence[Iterable[State]], State]],
                         accepting: Iterable[State],
                         name: str = 'table') -> TableAutomaton:
    """
    Builds a table automaton from (label, state, neighbor sets, next state)
    entries, which must cover Σ × Q × (2^Q)^r.
    """
    table = {}
    for sigma, q, neighbor_sets, target in transition_entries:
        n = tuple(frozenset(s) for s in neighbor_sets)
        if len(n) != relation_count:
            raise InvalidAutomatonError(
                f'entry for {sigma!r}, {q!r} has {len(n)} neighbor sets'
            )
        table[sigma, q, n] = target
    return TableAutomaton(states, relation_count, alphabet, init, table,
                          accepting, name=name)


def tabulate(states: Iterable[State], relation_count: int,
             alphabet: Iterable[Symbol], init: Initialization,
             function: TransitionFunction, accepting: Iterable[State],
             name: str = 'table') -> TableAutomaton:
    """
    Tabulates function over the complete domain Σ × Q × (2^Q)^r.
    """
    states = ordered(states)
    alphabet = tuple(alphabet)
    table = {
        (sigma, q, n): function(sigma, q, n)
        for sigma in alphabet
        for q in states
        for n in neighborhoods(states, relation_count)
    }
    return TableAutomaton(states, relation_count, alphabet, init, table,
                          accepting, name=name)


class RuleAutomaton(DistributedAutomaton):
    """
    An automaton whose transition function is evaluated on demand.

    rule must be pure. When given, states declares the finite state universe
    and successors an over-approximation of the one-step successor relation.
    """

    backing = Backing.RULE

    def __init__(self, relation_count: int, alphabet: Iterable[Symbol],
                 init: Initialization, rule: TransitionFunction,
                 accepting: Callable[[Any], bool], *,
                 states: Optional[Iterable[State]] = None,
                 successors: Optional[Callable[[Any], Iterable[State]]] = None,
                 name: str = 'rule') -> None:
        self.relation_count = relation_count
        self.alphabet = tuple(alphabet)
        self.rule = rule
        self.accepting_predicate = accepting
        self._states = None if states is None else frozenset(states)
        self._successors = successors
        self.name = name
        if isinstance(init, Mapping):
            self.init: Optional[State] = None
            self.init_map: Optional[Dict[Symbol, State]] = dict(init)
            missing = set(self.alphabet) - set(self.init_map)
            if missing:
                raise InvalidAutomatonError(
                    f'no initial state for labels {sorted(missing)}'
                )
        else:
            self.init = init
            self.init_map = None

    @property
    def states(self) -> Optional[FrozenSet[State]]:
        return self._states

    def initial_state(self, label: Symbol) -> State:
        if self.init_map is not None:
            return self.init_map[label]
        return self.init

    def transition(self, label: Symbol, state: State,
                   neighborhood: Neighborhood) -> State:
        return self.rule(label, state, neighborhood)

    def is_accepting(self, state: State) -> bool:
        return bool(self.accepting_predicate(state))

    def successors(self, state: State) -> Optional[FrozenSet[State]]:
        if self._successors is not None:
            return frozenset(self._successors(state))
        return super().successors(state)


def _require_enumerable(a: DistributedAutomaton,
                        budget: Optional[Budget]) -> FrozenSet[State]:
    universe = a.states
    if universe is None:
        raise UnsupportedShapeError(f'{a.name} does not declare its states')
    if a.backing is Backing.RULE:
        limit = resolve(budget).max_evaluations
        size = a.domain_size()
        assert size is not None
        if size > limit:
            logger.warning('Exhaustive evaluation of %s needs %d evaluations',
                           a.name, size)
            raise BudgetExceededError('exhaustive evaluation', limit)
    return universe


def _domain(a: DistributedAutomaton, universe: FrozenSet[State]
            ) -> Iterator[Tuple[Symbol, State, Neighborhood, State]]:
    if isinstance(a, TableAutomaton):
        for (sigma, q, n), target in a.table.items():
            yield sigma, q, n, target
        return
    for sigma in a.alphabet:
        for n in neighborhoods(universe, a.relation_count):
            for q in ordered(universe):
                yield sigma, q, n, a.transition(sigma, q, n)


def is_forgetful(a: DistributedAutomaton,
                 budget: Optional[Budget] = None) -> bool:
    """
    True iff the next state never depends on the current state.
    """
    universe = _require_enumerable(a, budget)
    seen: Dict[Tuple[Symbol, Neighborhood], State] = {}
    for sigma, _q, n, target in _domain(a, universe):
        previous = seen.setdefault((sigma, n), target)
        if previous != target:
            return False
    return True


def is_monovisioned(a: DistributedAutomaton,
                    budget: Optional[Budget] = None
                    ) -> Tuple[bool, Optional[State]]:
    """
    Looks for a non-accepting sink that every node enters when it sees more
    than one state, sees the sink, or is already in it. Returns the first
    such sink found.
    """
    if a.relation_count != 1:
        raise UnsupportedShapeError('monovision is defined for r = 1 only')
    universe = _require_enumerable(a, budget)
    entries = list(_domain(a, universe))
    for candidate in ordered(universe):
        if a.is_accepting(candidate):
            continue
        if all(target == candidate
               for _sigma, q, (n,), target in entries
               if q == candidate or candidate in n or len(n) > 1):
            return True, candidate
    return False, None


def monovisionize(a: DistributedAutomaton) -> DistributedAutomaton:
    """
    Adds a fresh rejecting sink, entered whenever a node sees more than one
    state or the sink itself. Acceptance on dipaths is unchanged.
    """
    if a.relation_count != 1:
        raise UnsupportedShapeError('monovision is defined for r = 1 only')
    universe = a.states
    reject = fresh_state(universe if universe is not None else (), 'rej')

    def rule(sigma: Symbol, q: State, neighborhood: Neighborhood) -> State:
        n, = neighborhood
        if q == reject or reject in n or len(n) > 1:
            return reject
        return a.transition(sigma, q, neighborhood)

    init: Initialization = {sigma: a.initial_state(sigma)
                            for sigma in a.alphabet}
    if isinstance(a, TableAutomaton) and a.init_map is None:
        init = a.init

    name = f'monovisioned({a.name})'
    if isinstance(a, TableAutomaton):
        return tabulate(a.states | {reject}, 1, a.alphabet, init, rule,
                        a.accepting, name=name)

    def successors(q: State) -> Iterable[State]:
        if q == reject:
            return {reject}
        inner = a.successors(q)
        if inner is None:
            raise UnsupportedShapeError(f'{a.name} has no successor relation')
        return inner | {reject}

    return RuleAutomaton(
        1, a.alphabet, init, rule,
        lambda q: q != reject and a.is_accepting(q),
        states=None if universe is None else universe | {reject},
        successors=successors,
        name=name,
    )


class StateDiagram:
    """
    The state diagram of an automaton: q → q' whenever some label and
    neighborhood take q to q'.
    """
    __slots__ = 'graph', 'exact'

    def __init__(self, graph: nx.DiGraph, exact: bool) -> None:
        self.graph = graph
        # False when edges come from a declared over-approximation.
        self.exact = exact

    @property
    def vertices(self) -> FrozenSet[State]:
        return frozenset(self.graph.nodes)

    @property
    def edges(self) -> FrozenSet[Tuple[State, State]]:
        return frozenset(self.graph.edges)

    def has_edge(self, source: State, target: State) -> bool:
        return self.graph.has_edge(source, target)

    def __repr__(self) -> str:
        return (f"StateDiagram(vertices={self.graph.number_of_nodes()}, "
                f"edges={self.graph.number_of_edges()}, exact={self.exact})")


def state_diagram(a: DistributedAutomaton,
                  budget: Optional[Budget] = None) -> StateDiagram:
    """
    Computes the state diagram over all declared states. RULE-backed
    automata too large to evaluate exhaustively fall back to their declared
    successor relation, explored from the declared states or, failing that,
    from the initial states.
    """
    limits = resolve(budget)
    universe = a.states
    size = a.domain_size()
    if a.backing is Backing.TABLE or (
            size is not None and size <= limits.max_evaluations):
        assert universe is not None
        diagram = nx.DiGraph()
        diagram.add_nodes_from(universe)
        diagram.add_edges_from((q, target)
                               for _sigma, q, _n, target in _domain(a, universe))
        return StateDiagram(diagram, exact=True)

    start = universe if universe is not None else a.initial_states
    if a.successors(next(iter(start))) is None:
        if universe is None:
            raise UnsupportedShapeError(
                f'{a.name} declares neither states nor successors'
            )
        raise BudgetExceededError('exhaustive evaluation',
                                  limits.max_evaluations)

    diagram = nx.DiGraph()
    pending = list(start)
    diagram.add_nodes_from(pending)
    while pending:
        q = pending.pop()
        successors = a.successors(q)
        assert successors is not None
        for target in successors:
            if target not in diagram:
                diagram.add_node(target)
                pending.append(target)
                if diagram.number_of_nodes() > limits.max_states:
                    logger.warning('State diagram of %s exceeds %d states',
                                   a.name, limits.max_states)
                    raise BudgetExceededError('reachable states',
                                              limits.max_states)
            diagram.add_edge(q, target)
    logger.debug('State diagram of %s: %d states, %d edges', a.name,
                 diagram.number_of_nodes(), diagram.number_of_edges())
    return StateDiagram(diagram, exact=False)


def is_quasi_acyclic(a: DistributedAutomaton,
                     budget: Optional[Budget] = None) -> bool:
    """
    True iff the only cycles of the state diagram are self-loops.
    """
    diagram = state_diagram(a, budget)
    return all(len(component) == 1
               for component in nx.strongly_connected_components(diagram.graph))


class ProductState(NamedTuple):
    left: Any
    right: Any
    # Latched: once a component visits an accepting state, it stays True.
    left_accepted: bool
    right_accepted: bool


def product(a1: DistributedAutomaton, a2: DistributedAutomaton,
            mode: Mode) -> RuleAutomaton:
    """
    Runs a1 and a2 side by side. The product accepts a pointed digraph iff
    a1 accepts it and/or a2 accepts it, according to mode.
    """
    if set(a1.alphabet) != set(a2.alphabet):
        raise InvalidAutomatonError('product of automata over different '
                                    'alphabets')
    if a1.relation_count != a2.relation_count:
        raise InvalidAutomatonError('product of automata with different '
                                    'relation counts')

    def pair(left: State, right: State,
             left_accepted: bool = False,
             right_accepted: bool = False) -> ProductState:
        return ProductState(left, right,
                            left_accepted or a1.is_accepting(left),
                            right_accepted or a2.is_accepting(right))

    init = {sigma: pair(a1.initial_state(sigma), a2.initial_state(sigma))
            for sigma in a1.alphabet}

    def rule(sigma: Symbol, q: ProductState,
             neighborhood: Neighborhood) -> ProductState:
        lefts = tuple(frozenset(s.left for s in n) for n in neighborhood)
        rights = tuple(frozenset(s.right for s in n) for n in neighborhood)
        return pair(a1.transition(sigma, q.left, lefts),
                    a2.transition(sigma, q.right, rights),
                    q.left_accepted, q.right_accepted)

    if mode is Mode.UNION:
        def accepting(q: ProductState) -> bool:
            return q.left_accepted or q.right_accepted
    else:
        def accepting(q: ProductState) -> bool:
            return q.left_accepted and q.right_accepted

    def successors(q: ProductState) -> Iterable[ProductState]:
        lefts = a1.successors(q.left)
        rights = a2.successors(q.right)
        if lefts is None or rights is None:
            raise UnsupportedShapeError('a component has no successor relation')
        return {pair(left, right, q.left_accepted, q.right_accepted)
                for left in lefts for right in rights}

    universe = None
    if a1.states is not None and a2.states is not None:
        universe = [ProductState(left, right, f1, f2)
                    for left in a1.states for right in a2.states
                    for f1 in (False, True) for f2 in (False, True)]

    return RuleAutomaton(a1.relation_count, a1.alphabet, init, rule,
                         accepting, states=universe, successors=successors,
                         name=f'{mode.value}({a1.name}, {a2.name})')
