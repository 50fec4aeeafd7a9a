#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

import pytest  # type: ignore
from hypothesis import given, settings  # type: ignore

from distautomata.automata import (
    InvalidAutomatonError, Mode, RuleAutomaton, UnsupportedShapeError,
    is_forgetful, is_monovisioned, is_quasi_acyclic, make_table_automaton,
    monovisionize, product, state_diagram, tabulate,
)
from distautomata.classical import dfa_to_forgetful
from distautomata.emptiness import bounded_search, dipath_search
from distautomata.graphs import (
    PointedDigraph, dipath_of_word, enumerate_digraphs, enumerate_dipaths,
    make_digraph,
)
from distautomata.runtime import accepting_nodes, decide_acceptance
from distautomata.settings import Budget, BudgetExceededError

from specimens import W1, always, copy_when_alone, f1, swap
from strategies import quasi_acyclic_automata, table_automata

EMPTY = frozenset()


def one_state_entries(target='q'):
    return [('a', 'q', [[]], target), ('a', 'q', [['q']], target)]


def test_make_table_automaton():
    a = make_table_automaton(['q'], 1, 'a', 'q', one_state_entries(), ['q'])
    assert a.transition('a', 'q', (EMPTY,)) == 'q'
    assert a.is_accepting('q')
    assert decide_acceptance(a, dipath_of_word('aaa')).accepted


def test_missing_entry():
    with pytest.raises(InvalidAutomatonError):
        make_table_automaton(['q'], 1, 'a', 'q', one_state_entries()[:1], [])


def test_target_outside_states():
    with pytest.raises(InvalidAutomatonError):
        make_table_automaton(['q'], 1, 'a', 'q', one_state_entries('z'), [])


def test_accepting_outside_states():
    with pytest.raises(InvalidAutomatonError):
        make_table_automaton(['q'], 1, 'a', 'q', one_state_entries(), ['z'])


def test_initialization_map_must_be_total():
    with pytest.raises(InvalidAutomatonError):
        tabulate(['q'], 1, 'ab', {'a': 'q'}, lambda s, q, n: 'q', [])


def test_is_forgetful():
    assert is_forgetful(dfa_to_forgetful(W1))
    assert not is_forgetful(copy_when_alone())
    assert is_forgetful(always(True))
    assert is_forgetful(f1())


def test_is_forgetful_on_rules():
    rule = RuleAutomaton(1, 'a', 0, lambda s, q, n: min(n[0], default=0), bool,
                         states=[0, 1])
    assert is_forgetful(rule)
    undeclared = RuleAutomaton(1, 'a', 0, lambda s, q, n: 0, bool)
    with pytest.raises(UnsupportedShapeError):
        is_forgetful(undeclared)
    with pytest.raises(BudgetExceededError):
        is_forgetful(rule, Budget(max_evaluations=4))


def test_is_monovisioned():
    assert is_monovisioned(always(True)) == (False, None)
    holds, sink = is_monovisioned(monovisionize(always(True)))
    assert holds and sink == 'rej'
    # Sees {0, 1} and does not reject.
    assert not is_monovisioned(f1())[0]
    with pytest.raises(UnsupportedShapeError):
        is_monovisioned(always(True, relation_count=2))


def test_monovisionize_always_accept():
    a = monovisionize(always(True))
    assert a.states == frozenset({'q', 'rej'})
    for pg in enumerate_dipaths('a', 4):
        assert decide_acceptance(a, pg).accepted


def test_monovisionize_picks_fresh_name():
    a = tabulate(['rej'], 1, 'a', 'rej', lambda s, q, n: 'rej', [])
    assert monovisionize(a).states == frozenset({'rej', "rej'"})


def test_monovisioned_point_seeing_two_states_rejects():
    # Nodes 0 and 1 are labeled differently, so they start apart.
    a = tabulate(['x', 'y', 'yes'], 1, 'ab', {'a': 'x', 'b': 'y'},
                 lambda s, q, n: 'yes' if n else q, ['yes'])
    pg = PointedDigraph(make_digraph(3, 1, [[(0, 2), (1, 2)]], 'aba'), 2)
    assert decide_acceptance(a, pg).accepted
    assert not decide_acceptance(monovisionize(a), pg).accepted


@settings(max_examples=30)
@given(table_automata())
def test_monovisionize_agrees_on_dipaths(a):
    b = monovisionize(a)
    assert is_monovisioned(b)[0]
    for pg in enumerate_dipaths(a.alphabet, 4):
        assert (decide_acceptance(a, pg).accepted
                == decide_acceptance(b, pg).accepted)


def test_state_diagram():
    diagram = state_diagram(always(True))
    assert diagram.vertices == frozenset({'q'})
    assert diagram.has_edge('q', 'q')
    assert diagram.exact

    diagram = state_diagram(swap())
    assert diagram.has_edge(0, 1) and diagram.has_edge(1, 0)
    assert not diagram.has_edge(0, 0)


def test_is_quasi_acyclic():
    assert is_quasi_acyclic(always(True))
    assert not is_quasi_acyclic(swap())
    # 2 falls back to 1 on an empty neighborhood.
    assert state_diagram(f1()).has_edge(2, 1)
    assert not is_quasi_acyclic(f1())


def test_quasi_acyclic_under_fresh_sink():
    for a in (always(False), swap(), f1()):
        sinked = tabulate(a.states | {'sink'}, 1, a.alphabet, a.init,
                          lambda s, q, n: 'sink' if q == 'sink'
                          else a.transition(s, q, (n[0] - {'sink'},)),
                          a.accepting)
        assert is_quasi_acyclic(sinked) == is_quasi_acyclic(a)


def test_state_diagram_needs_states_or_successors():
    undeclared = RuleAutomaton(1, 'a', 0, lambda s, q, n: 0, bool)
    with pytest.raises(UnsupportedShapeError):
        state_diagram(undeclared)


def test_state_diagram_from_successors():
    counter = RuleAutomaton(1, 'a', 0, lambda s, q, n: min(q + 1, 5),
                            lambda q: q == 5,
                            successors=lambda q: {min(q + 1, 5)})
    diagram = state_diagram(counter)
    assert diagram.vertices == frozenset(range(6))
    assert not diagram.exact
    assert is_quasi_acyclic(counter)


def test_product_mismatches():
    with pytest.raises(InvalidAutomatonError):
        product(always(True, 'a'), always(True, 'ab'), Mode.UNION)
    with pytest.raises(InvalidAutomatonError):
        product(always(True), always(True, relation_count=2), Mode.UNION)


def test_product_identities():
    for pg in enumerate_dipaths('a', 4):
        for a in (f1(), always(False)):
            expected = decide_acceptance(a, pg).accepted
            both = product(a, always(True), Mode.INTERSECTION)
            either = product(a, always(False), Mode.UNION)
            assert decide_acceptance(both, pg).accepted == expected
            assert decide_acceptance(either, pg).accepted == expected


def test_product_accepts_at_different_times():
    pulse = tabulate([0, 1, 2], 1, 'a', 0,
                     lambda s, q, n: min(q + 1, 2), [1])
    late = tabulate([0, 1, 2, 3], 1, 'a', 0,
                    lambda s, q, n: min(q + 1, 3), [3])
    both = product(pulse, late, Mode.INTERSECTION)
    verdict = decide_acceptance(both, dipath_of_word('a'))
    assert verdict.accepted and verdict.accepting_round == 3


@settings(max_examples=20)
@given(table_automata(alphabets=('a',)), table_automata(alphabets=('a',)))
def test_product_combines_acceptance(a1, a2):
    union = product(a1, a2, Mode.UNION)
    intersection = product(a1, a2, Mode.INTERSECTION)
    for g in enumerate_digraphs('a', 1, 3):
        left = set(accepting_nodes(a1, g))
        right = set(accepting_nodes(a2, g))
        assert set(accepting_nodes(union, g)) == left | right
        assert set(accepting_nodes(intersection, g)) == left & right


@settings(max_examples=20)
@given(quasi_acyclic_automata(), quasi_acyclic_automata(),
       table_automata(alphabets=('a',)))
def test_product_preserves_quasi_acyclicity(a1, a2, other):
    assert is_quasi_acyclic(a1) and is_quasi_acyclic(a2)
    for mode in Mode:
        assert is_quasi_acyclic(product(a1, a2, mode))
    if not is_quasi_acyclic(other):
        assert not is_quasi_acyclic(product(other, a2, Mode.UNION))


@settings(max_examples=20)
@given(table_automata())
def test_monovisioned_acceptance_collapses_to_dipaths(a):
    a = monovisionize(a)
    found = bounded_search(a, max_nodes=3, max_rounds=12)
    if found is not None:
        t = decide_acceptance(a, found).accepting_round
        assert dipath_search(a, max_len=t + 1, max_rounds=t) is not None
    on_dipath = dipath_search(a, max_len=3, max_rounds=12)
    if on_dipath is not None:
        assert found is not None
