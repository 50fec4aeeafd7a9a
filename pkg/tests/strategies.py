#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

"""
Hypothesis strategies for small automata and digraphs.
"""

from hypothesis import strategies as st  # type: ignore

from distautomata.automata import neighborhoods, tabulate
from distautomata.classical import TreeAutomaton, WordAutomaton
from distautomata.graphs import UNLABELED, PointedDigraph, make_digraph

ALPHABETS = ('a', 'ab')


@st.composite
def table_automata(draw, max_states=3, relation_counts=(1,),
                   alphabets=ALPHABETS):
    """
    Arbitrary table automata with states 0..n-1.
    """
    n = draw(st.integers(1, max_states))
    r = draw(st.sampled_from(relation_counts))
    alphabet = draw(st.sampled_from(alphabets))
    states = range(n)
    domain = [(sigma, q, nb) for sigma in alphabet for q in states
              for nb in neighborhoods(states, r)]
    targets = draw(st.lists(st.integers(0, n - 1),
                            min_size=len(domain), max_size=len(domain)))
    table = dict(zip(domain, targets))
    accepting = draw(st.sets(st.integers(0, n - 1)))
    init = draw(_initialization(alphabet, n))
    return tabulate(states, r, alphabet, init,
                    lambda sigma, q, nb: table[sigma, q, nb], accepting,
                    name='random')


@st.composite
def forgetful_automata(draw, max_states=3, relation_counts=(1,),
                       alphabets=ALPHABETS):
    n = draw(st.integers(1, max_states))
    r = draw(st.sampled_from(relation_counts))
    alphabet = draw(st.sampled_from(alphabets))
    states = range(n)
    domain = [(sigma, nb) for sigma in alphabet
              for nb in neighborhoods(states, r)]
    targets = draw(st.lists(st.integers(0, n - 1),
                            min_size=len(domain), max_size=len(domain)))
    table = dict(zip(domain, targets))
    accepting = draw(st.sets(st.integers(0, n - 1)))
    init = draw(_initialization(alphabet, n))
    return tabulate(states, r, alphabet, init,
                    lambda sigma, q, nb: table[sigma, nb], accepting,
                    name='forgetful')


@st.composite
def quasi_acyclic_automata(draw, max_states=3, alphabet='a'):
    """
    Automata whose transitions never decrease the state number.
    """
    n = draw(st.integers(1, max_states))
    states = range(n)
    table = {}
    for sigma in alphabet:
        for q in states:
            for nb in neighborhoods(states, 1):
                table[sigma, q, nb] = draw(st.integers(q, n - 1))
    accepting = draw(st.sets(st.integers(0, n - 1)))
    return tabulate(states, 1, alphabet, 0,
                    lambda sigma, q, nb: table[sigma, q, nb], accepting,
                    name='monotone')


def _initialization(alphabet, n):
    single = st.integers(0, n - 1)
    per_label = st.fixed_dictionaries({sigma: st.integers(0, n - 1)
                                       for sigma in alphabet})
    return st.one_of(single, per_label)


@st.composite
def word_automata(draw, max_states=3, alphabet='ab'):
    n = draw(st.integers(1, max_states))
    states = [f'p{i}' for i in range(n)]
    transitions = {(p, sigma): draw(st.sampled_from(states))
                   for p in states for sigma in alphabet}
    accepting = draw(st.sets(st.sampled_from(states)))
    return WordAutomaton(states, alphabet, states[0], transitions, accepting)


@st.composite
def tree_automata(draw, max_states=3, rank=2):
    n = draw(st.integers(1, max_states))
    states = list(range(n))
    transitions = {}
    for k in range(rank + 1):
        for children in _tuples(states, k):
            transitions[children, UNLABELED] = draw(st.sampled_from(states))
    accepting = draw(st.sets(st.sampled_from(states)))
    return TreeAutomaton(states, rank, (UNLABELED,), transitions, accepting)


def _tuples(states, k):
    if k == 0:
        return [()]
    return [rest + (q,) for rest in _tuples(states, k - 1) for q in states]


@st.composite
def pointed_digraphs(draw, alphabet='a', relation_count=1, max_nodes=3):
    n = draw(st.integers(1, max_nodes))
    labels = draw(st.lists(st.sampled_from(alphabet), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(n)]
    edges = [draw(st.sets(st.sampled_from(pairs)))
             for _ in range(relation_count)]
    point = draw(st.integers(0, n - 1))
    return PointedDigraph(make_digraph(n, relation_count, edges, labels), point)
