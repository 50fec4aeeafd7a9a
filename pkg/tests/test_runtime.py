#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

import pytest  # type: ignore
from hypothesis import given, settings  # type: ignore

from distautomata.automata import tabulate
from distautomata.graphs import PointedDigraph, dipath_of_word, make_digraph
from distautomata.runtime import (
    Configuration, IncompatibleInputError, accepting_nodes, accepts_within,
    decide_acceptance, initial_configuration, run, step, trace,
    visited_state_sequence,
)
from distautomata.settings import Budget, BudgetExceededError

from specimens import always, f1, swap
from strategies import pointed_digraphs, table_automata


def count_neighbors():
    """
    Records how many distinct states each relation shows.
    """
    def delta(sigma, q, neighborhood):
        n, = neighborhood
        return min(len(n), 2)
    return tabulate((0, 1, 2), 1, 'ab', {'a': 0, 'b': 1}, delta, (2,),
                    name='count')


def test_initial_configuration():
    g = make_digraph(3, 1, [[]], 'aba')
    assert initial_configuration(count_neighbors(), g) == Configuration(
        (0, 1, 0), 0
    )


def test_incompatible_inputs():
    g = make_digraph(1, 1, [[]], 'c')
    with pytest.raises(IncompatibleInputError):
        initial_configuration(count_neighbors(), g)
    g = make_digraph(1, 2, [[], []], 'a')
    with pytest.raises(IncompatibleInputError):
        initial_configuration(always(True), g)


def test_neighbors_are_seen_as_a_set():
    # Two neighbors in the same state look like one.
    same = make_digraph(3, 1, [[(0, 2), (1, 2)]], 'aaa')
    c = step(count_neighbors(), same, initial_configuration(count_neighbors(), same))
    assert c.assignment == (0, 0, 1)
    assert c.round == 1
    different = make_digraph(3, 1, [[(0, 2), (1, 2)]], 'aba')
    a = count_neighbors()
    c = step(a, different, initial_configuration(a, different))
    assert c.assignment[2] == 2


def test_run_is_infinite():
    rounds = [c.round for c, _ in zip(run(swap(), dipath_of_word('a')), range(5))]
    assert rounds == [0, 1, 2, 3, 4]


def test_trace():
    t = trace(f1(), dipath_of_word('aa'), 3)
    assert t.rounds == 3
    assert t.states_at(1) == [0, 1, 2, 2]
    assert t.states_at(0) == [0, 1, 1, 1]
    assert t.accepted_at == 2
    with pytest.raises(ValueError):
        trace(f1(), dipath_of_word('a'), -1)


def test_visited_state_sequence_is_a_prefix():
    pg = dipath_of_word('aaa')
    longer = visited_state_sequence(f1(), pg, 6)
    for t in range(6):
        assert visited_state_sequence(f1(), pg, t) == longer[:t + 1]


def test_accepts_within():
    pg = dipath_of_word('aa')
    assert not accepts_within(f1(), pg, 1)
    assert accepts_within(f1(), pg, 2)
    assert accepts_within(f1(), pg, 10)


def test_decide_acceptance():
    assert decide_acceptance(f1(), dipath_of_word('aa')).accepting_round == 2
    verdict = decide_acceptance(f1(), dipath_of_word('a'))
    assert not verdict.accepted
    assert (verdict.cycle_start, verdict.cycle_length) == (1, 1)

    verdict = decide_acceptance(swap(), dipath_of_word('a'))
    assert not verdict.accepted
    assert (verdict.cycle_start, verdict.cycle_length) == (0, 2)


def test_decide_acceptance_budget():
    with pytest.raises(BudgetExceededError):
        decide_acceptance(swap(), dipath_of_word('a'),
                          Budget(max_configurations=1))


def test_accepting_nodes():
    g = make_digraph(3, 1, [[(0, 1), (1, 2)]], 'aaa')
    assert accepting_nodes(f1(), g) == {1: 2, 2: 2}
    assert accepting_nodes(f1(), g, max_rounds=1) == {}
    assert accepting_nodes(always(True), g) == {0: 0, 1: 0, 2: 0}


@settings(max_examples=40)
@given(table_automata(), pointed_digraphs(alphabet='ab'))
def test_decided_verdicts_are_certified(a, pg):
    if not set(pg.graph.labels) <= set(a.alphabet):
        return
    verdict = decide_acceptance(a, pg)
    if verdict.accepted:
        t = verdict.accepting_round
        assert trace(a, pg, t).accepted_at == t
    else:
        configurations = [c.assignment for c, _ in zip(
            run(a, pg), range(verdict.cycle_start + verdict.cycle_length + 1))]
        assert (configurations[verdict.cycle_start]
                == configurations[verdict.cycle_start + verdict.cycle_length])
        assert not any(a.is_accepting(c[pg.point]) for c in configurations)


@settings(max_examples=40)
@given(table_automata(), pointed_digraphs())
def test_accepting_nodes_agrees_with_decision(a, pg):
    accepted = accepting_nodes(a, pg.graph)
    verdict = decide_acceptance(a, pg)
    assert (pg.point in accepted) == verdict.accepted
    if verdict.accepted:
        assert accepted[pg.point] == verdict.accepting_round


@settings(max_examples=40)
@given(table_automata(), pointed_digraphs(alphabet='ab'))
def test_bounded_runs_agree_past_the_cycle(a, pg):
    if not set(pg.graph.labels) <= set(a.alphabet):
        return
    verdict = decide_acceptance(a, pg)
    if verdict.accepted:
        horizon = verdict.accepting_round
    else:
        horizon = verdict.cycle_start + verdict.cycle_length
        # Configurations before the repeat are pairwise distinct.
        assert horizon <= len(a.states) ** pg.node_count
    for extra in (0, 1, 5):
        assert accepts_within(a, pg, horizon + extra) == verdict.accepted
