#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

import pytest  # type: ignore

from distautomata.emptiness import dipath_search
from distautomata.reductions.turing import (
    Cell, InvalidMachineError, Marker, Move, TapeBoundaryError, TmConfig,
    TuringMachine, tm_simulate, tm_to_automaton, tm_traversal_check,
    unlabeled_dipath,
)
from distautomata.runtime import accepts_within, decide_acceptance, trace

from specimens import LOOP, M1, M2, ZIGZAG

FALLS_OFF = TuringMachine(('q', 'h'), ('b',), 'q', 'b',
                          {('q', 'b'): ('h', 'b', 'L')}, 'h')


def test_simulate_zigzag():
    configs = tm_simulate(ZIGZAG, 10)
    assert configs == [
        TmConfig((), 1, 'q0'),
        TmConfig(('x',), 2, 'q1'),
        TmConfig(('x', 'x'), 1, 'q2'),
        TmConfig(('b', 'x'), 2, 'q3'),
        TmConfig(('b', 'b'), 3, 'h'),
    ]


def test_simulate_stops_at_max_steps():
    assert len(tm_simulate(LOOP, 3)) == 4


def test_simulate_off_the_tape():
    with pytest.raises(TapeBoundaryError):
        tm_simulate(FALLS_OFF, 5)


def test_config_cells():
    config = TmConfig(('x',), 2, 'q')
    assert config.cells(3, 'b') == [Cell('x'), Cell('b', 'q'), Cell('b')]


def test_moves_are_normalized():
    assert M1.delta['q', 'b'] == ('h', 'x', Move.R)


@pytest.mark.parametrize('delta', [
    {},
    {('q', 'b'): ('z', 'b', 'R')},
    {('q', 'b'): ('h', 'y', 'R')},
    {('q', 'b'): ('h', 'b', 'R'), ('h', 'b'): ('h', 'b', 'R')},
])
def test_malformed_machines(delta):
    with pytest.raises(InvalidMachineError):
        TuringMachine(('q', 'h'), ('b',), 'q', 'b', delta, 'h')


def test_first_node_replays_the_initial_configuration():
    run = trace(tm_to_automaton(M1), unlabeled_dipath(1), 3)
    emitted = [s.latest for s in run.states_at(0)]
    assert emitted == [Marker.WAITING, Cell('b', 'q'), Cell('b'), Cell('b')]


@pytest.mark.parametrize('machine, nodes', [(M1, 2), (M2, 3), (ZIGZAG, 5)])
def test_shortest_accepted_dipath(machine, nodes):
    a = tm_to_automaton(machine)
    word, pg = dipath_search(a, max_len=6, max_rounds=40)
    assert len(word) == nodes == len(tm_simulate(machine, 10))
    assert pg.node_count == nodes


def test_longer_dipaths_are_accepted():
    a = tm_to_automaton(M2)
    for n in range(3, 7):
        assert decide_acceptance(a, unlabeled_dipath(n)).accepted


def test_acceptance_round():
    # Node t emits cell j of the t-th configuration in round 2t + j.
    a = tm_to_automaton(M1)
    assert not accepts_within(a, unlabeled_dipath(2), 3)
    assert accepts_within(a, unlabeled_dipath(2), 4)


def test_non_halting_machine():
    assert dipath_search(tm_to_automaton(LOOP), max_len=6,
                         max_rounds=40) is None


def test_falling_off_the_tape_is_rejected():
    a = tm_to_automaton(FALLS_OFF)
    assert dipath_search(a, max_len=4, max_rounds=30) is None
    run = trace(a, unlabeled_dipath(2), 6)
    assert run.states_at(1)[-1].latest is Marker.ERROR


@pytest.mark.parametrize('machine', [M1, M2, ZIGZAG, LOOP])
def test_traversal(machine):
    assert tm_traversal_check(machine, 5, 20)


def test_traversal_needs_a_node():
    with pytest.raises(ValueError):
        tm_traversal_check(M1, 0, 3)
