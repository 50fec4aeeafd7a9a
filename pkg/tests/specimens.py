#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

"""
Hand-built automata, machines and instances shared by the tests.
"""

from distautomata.automata import tabulate
from distautomata.classical import WordAutomaton
from distautomata.graphs import UNLABELED, DigraphBuilder, PointedDigraph
from distautomata.reductions.pcp import PcpInstance
from distautomata.reductions.turing import TuringMachine


def f1():
    """
    Forgetful: 0 → 1 from an empty or {0} neighborhood; anything that sees
    1 or 2 becomes 2 (accepting).
    """
    def delta(sigma, q, neighborhood):
        n, = neighborhood
        return 2 if n & {1, 2} else 1
    return tabulate((0, 1, 2), 1, 'a', 0, delta, (2,), name='F1')


def always(accept: bool, alphabet='a', relation_count=1):
    return tabulate(('q',), relation_count, alphabet, 'q',
                    lambda sigma, q, n: 'q', ('q',) if accept else (),
                    name='always' if accept else 'never')


def copy_when_alone():
    """
    Keeps its state when it sees nobody; otherwise moves to 'b'. Not
    forgetful.
    """
    def delta(sigma, q, neighborhood):
        n, = neighborhood
        return q if not n else 'b'
    return tabulate(('a', 'b'), 1, 'a', 'a', delta, ('b',), name='copy')


def swap():
    return tabulate((0, 1), 1, 'a', 0, lambda sigma, q, n: 1 - q, (),
                    name='swap')


W1 = WordAutomaton(('p0', 'p1'), 'ab', 'p0',
                   {('p0', 'a'): 'p1', ('p1', 'a'): 'p1',
                    ('p0', 'b'): 'p0', ('p1', 'b'): 'p0'},
                   ('p1',))

M1 = TuringMachine(('q', 'h'), ('b', 'x'), 'q', 'b',
                   {('q', 'b'): ('h', 'x', 'R'), ('q', 'x'): ('h', 'x', 'R')},
                   'h')

M2 = TuringMachine(('q', "q'", 'h'), ('b', 'x'), 'q', 'b',
                   {('q', 'b'): ("q'", 'x', 'R'), ('q', 'x'): ("q'", 'x', 'R'),
                    ("q'", 'b'): ('h', 'x', 'R'), ("q'", 'x'): ('h', 'x', 'R')},
                   'h')


def _zigzag():
    states = ('q0', 'q1', 'q2', 'q3', 'h')
    delta = {(q, s): ('h', s, 'R') for q in states[:-1] for s in 'bx'}
    delta.update({
        ('q0', 'b'): ('q1', 'x', 'R'),
        ('q1', 'b'): ('q2', 'x', 'L'),
        ('q2', 'x'): ('q3', 'b', 'R'),
        ('q3', 'x'): ('h', 'b', 'R'),
    })
    return TuringMachine(states, 'bx', 'q0', 'b', delta, 'h')


# Right, right, left, right, right; halts at step 4.
ZIGZAG = _zigzag()

LOOP = TuringMachine(('q', 'h'), ('b',), 'q', 'b',
                     {('q', 'b'): ('q', 'b', 'R')}, 'h')

THREE_TILES = PcpInstance({3: ('00', '100'), 5: ('010', '0'), 7: ('11', '01')})
THREE_TILES_SOLUTION = (5, 3, 7, 3)

# Solution: (3, 5), both sides spell 010.
TWO_TILES = PcpInstance({3: ('0', '01'), 5: ('10', '0')})


def perfect_tree(depth: int) -> PointedDigraph:
    builder = DigraphBuilder(2)
    root = builder.add_node(UNLABELED)
    level = [root]
    for _ in range(depth):
        next_level = []
        for parent in level:
            for k in (1, 2):
                child = builder.add_node(UNLABELED)
                builder.add_edge(k, child, parent)
                next_level.append(child)
        level = next_level
    return builder.build(root)


def root_with_one_child() -> PointedDigraph:
    builder = DigraphBuilder(2)
    root = builder.add_node(UNLABELED)
    builder.add_edge(1, builder.add_node(UNLABELED), root)
    return builder.build(root)
