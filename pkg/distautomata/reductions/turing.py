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
Turing machines as distributed automata on dipaths.

The automaton trades space for time: the t-th node of a dipath replays the
configuration of the machine at time t, one cell per round, from left to
right. Each node remembers the last three cells it emitted, which is all
its successor needs to compute the next configuration. The automaton
accepts a dipath with t+1 nodes iff the machine has halted by time t.

Machines have a single tape, infinite to the right and initially blank;
cells are numbered from 1.
"""

import logging
from enum import Enum
from itertools import product
from typing import (
    Dict, FrozenSet, Hashable, Iterable, List, Mapping, NamedTuple,
    Optional, Sequence, Tuple, Union,
)

from ..automata import Neighborhood, RuleAutomaton
from ..graphs import UNLABELED, PointedDigraph, Symbol, dipath_of_word
from ..runtime import trace


__all__ = [
    'Move', 'TuringMachine', 'TmConfig', 'Marker', 'Cell', 'SimState',
    'InvalidMachineError', 'TapeBoundaryError',
    'tm_simulate', 'tm_to_automaton', 'tm_traversal_check',
]

logger = logging.getLogger(__name__)


class InvalidMachineError(ValueError):
    """
    Raised when a Turing machine is malformed.
    """


class TapeBoundaryError(RuntimeError):
    """
    Raised when the head moves left of the first cell.
    """


class Move(Enum):
    L = 'L'
    R = 'R'


Action = Tuple[Hashable, Symbol, Move]


class TuringMachine:
    """
    A deterministic single-tape Turing machine.
    """
    __slots__ = 'states', 'tape_alphabet', 'initial', 'blank', 'delta', 'halt'

    def __init__(self, states: Iterable[Hashable],
                 tape_alphabet: Iterable[Symbol], initial: Hashable,
                 blank: Symbol, delta: Mapping[Tuple[Hashable, Symbol], Action],
                 halt: Hashable) -> None:
        self.states = tuple(states)
        self.tape_alphabet = tuple(tape_alphabet)
        self.initial = initial
        self.blank = blank
        self.delta: Dict[Tuple[Hashable, Symbol], Action] = {
            key: (target, written, Move(move))
            for key, (target, written, move) in delta.items()
        }
        self.halt = halt
        self._validate()

    def _validate(self) -> None:
        if self.initial not in self.states or self.halt not in self.states:
            raise InvalidMachineError('initial and halting states must be states')
        if self.blank not in self.tape_alphabet:
            raise InvalidMachineError('the blank must be a tape symbol')
        for q in self.states:
            if q == self.halt:
                continue
            for s in self.tape_alphabet:
                action = self.delta.get((q, s))
                if action is None:
                    raise InvalidMachineError(f'missing transition for {q!r}, {s!r}')
                target, written, _move = action
                if target not in self.states or written not in self.tape_alphabet:
                    raise InvalidMachineError(f'bad transition for {q!r}, {s!r}')
        if any(q == self.halt for q, _s in self.delta):
            raise InvalidMachineError('the halting state has no transitions')

    def __eq__(self, other) -> bool:
        return (isinstance(other, TuringMachine)
                and self.states == other.states
                and self.tape_alphabet == other.tape_alphabet
                and self.initial == other.initial
                and self.blank == other.blank
                and self.delta == other.delta
                and self.halt == other.halt)

    def __repr__(self) -> str:
        return (f"TuringMachine(states={self.states!r}, "
                f"tape_alphabet={self.tape_alphabet!r}, "
                f"initial={self.initial!r}, halt={self.halt!r})")


class Marker(Enum):
    WAITING = 'o'
    ERROR = '!'


class Cell(NamedTuple):
    symbol: Symbol
    # The machine's state, when the head is on this cell.
    head: Optional[Hashable] = None


SimCell = Union[Marker, Cell]


class SimState(NamedTuple):
    earlier: SimCell
    previous: SimCell
    latest: SimCell


class TmConfig(NamedTuple):
    tape: Tuple[Symbol, ...]
    head: int
    state: Hashable

    def cells(self, width: int, blank: Symbol) -> List[Cell]:
        """
        Cells 1..width, blank-extended.
        """
        symbols = self.tape + (blank,) * max(0, width - len(self.tape))
        return [Cell(symbols[i - 1], self.state if i == self.head else None)
                for i in range(1, width + 1)]


def tm_simulate(m: TuringMachine, max_steps: int) -> List[TmConfig]:
    """
    Configurations C_0, C_1, ... up to halting or max_steps steps.
    """
    config = TmConfig((), 1, m.initial)
    configs = [config]
    for _ in range(max_steps):
        if config.state == m.halt:
            break
        tape = list(config.tape)
        if config.head > len(tape):
            tape.extend([m.blank] * (config.head - len(tape)))
        target, written, move = m.delta[config.state, tape[config.head - 1]]
        tape[config.head - 1] = written
        head = config.head + (1 if move is Move.R else -1)
        if head < 1:
            raise TapeBoundaryError(f'head left the tape at step {len(configs)}')
        config = TmConfig(tuple(tape), head, target)
        configs.append(config)
    return configs


def tm_to_automaton(m: TuringMachine) -> RuleAutomaton:
    """
    Compiles m into a 1-relational automaton over an unlabeled alphabet.
    """
    waiting, error = Marker.WAITING, Marker.ERROR
    start = SimState(waiting, waiting, waiting)

    def next_cell(c1: SimCell, c2: Cell, c3: SimCell) -> SimCell:
        # c1, c2, c3 are three consecutive cells of the previous
        # configuration; the result is the new content of c2's position.
        if c2.head is not None:
            if c2.head == m.halt:
                return c2
            _target, written, move = m.delta[c2.head, c2.symbol]
            if move is Move.L and c1 is waiting:
                return error
            return Cell(written)
        if isinstance(c1, Cell) and c1.head is not None and c1.head != m.halt:
            target, _written, move = m.delta[c1.head, c1.symbol]
            if move is Move.R:
                return Cell(c2.symbol, target)
        if isinstance(c3, Cell) and c3.head is not None and c3.head != m.halt:
            target, _written, move = m.delta[c3.head, c3.symbol]
            if move is Move.L:
                return Cell(c2.symbol, target)
        return Cell(c2.symbol)

    def emit(q: SimState, n: FrozenSet[SimState]) -> SimCell:
        if q.latest is error or len(n) > 1:
            return error
        if not n:
            # The first node replays the initial configuration.
            if q.latest is waiting:
                return Cell(m.blank, m.initial)
            return Cell(m.blank)
        predecessor, = n
        if error in predecessor:
            return error
        c1, c2, c3 = predecessor
        if c2 is waiting:
            return waiting
        assert isinstance(c2, Cell)
        return next_cell(c1, c2, c3)

    def rule(_sigma: Symbol, q: SimState,
             neighborhood: Neighborhood) -> SimState:
        n, = neighborhood
        return SimState(q.previous, q.latest, emit(q, n))

    def accepting(q: SimState) -> bool:
        return isinstance(q.latest, Cell) and q.latest.head == m.halt

    cells: List[SimCell] = [waiting, error]
    cells.extend(Cell(s) for s in m.tape_alphabet)
    cells.extend(Cell(s, q) for q in m.states for s in m.tape_alphabet)

    def successors(q: SimState) -> Iterable[SimState]:
        return {SimState(q.previous, q.latest, c) for c in cells}

    return RuleAutomaton(1, (UNLABELED,), start, rule, accepting,
                         states=[SimState(*cells3)
                                 for cells3 in product(cells, repeat=3)],
                         successors=successors, name='turing')


def unlabeled_dipath(n_nodes: int) -> PointedDigraph:
    return dipath_of_word(UNLABELED * n_nodes)


def tm_traversal_check(m: TuringMachine, n_nodes: int, horizon: int) -> bool:
    """
    Runs the compiled automaton on a dipath and checks that its t-th node
    emits the cells of C_t, in order, over the first horizon rounds.
    """
    if n_nodes < 1:
        raise ValueError('a dipath has at least one node')
    configs = tm_simulate(m, n_nodes - 1)
    run = trace(tm_to_automaton(m), unlabeled_dipath(n_nodes), horizon)
    for t in range(n_nodes):
        emitted = [s.latest for s in run.states_at(t)
                   if s.latest is not Marker.WAITING]
        # A halted machine keeps its last configuration.
        config = configs[min(t, len(configs) - 1)]
        expected = config.cells(len(emitted), m.blank)
        if emitted != expected:
            logger.info('Node %d emitted %r, expected %r', t, emitted, expected)
            return False
    return True
