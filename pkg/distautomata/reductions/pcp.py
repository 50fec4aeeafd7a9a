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
Post's correspondence problem as emptiness of quasi-acyclic automata.

A candidate solution i_1 ... i_n is encoded as a labeled ditree. The root
(label x) has one child per index; the k-th child u_k, of type i_k, sits at
the end of a "fuse", a chain of white nodes whose types are i_1 ... i_{k-1}
in some order. Every white node of type i also has a gray "side fuse" of
nodes labeled i', whose length is the product of the white types below it.

The automaton is the intersection of two automata that run side by side:

 - the first streams the bits of u_{i_k} and v_{i_k} from every white node,
   each node starting right after its predecessor has finished, and the
   root compares the upper and lower streams bit by bit;
 - the second checks that fuses are built as described, using the fact that
   the types are distinct odd primes: signals travel through side fuses at
   speed 1 and 1/i, and the k-th child must emit its two signals at
   products of the types of its fuse. Unexpected neighborhoods raise an
   alarm that reaches the root.

All components only move forward, so the automaton is quasi-acyclic.
"""

import logging
from dataclasses import dataclass
from enum import Enum, IntEnum
from itertools import product as cartesian_product
from typing import (
    Any, Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional,
    Sequence, Tuple,
)

from ..automata import Mode, Neighborhood, RuleAutomaton, product
from ..graphs import DigraphBuilder, PointedDigraph, Symbol


__all__ = [
    'PcpInstance', 'InvalidInstanceError', 'InvalidSequenceError',
    'NodeKind', 'NodeType', 'SPECTATOR',
    'BitState', 'IdleState', 'SpectatorState',
    'Phase', 'RootPhase', 'SideState', 'FuseState', 'Alarm', 'RootState',
    'is_prime', 'pcp_check_solution', 'pcp_brute_force',
    'pcp_encode_solution', 'expected_signal_times',
    'first_task_automaton', 'second_task_automaton', 'pcp_to_automaton',
]

logger = logging.getLogger(__name__)

# Label of the root.
SPECTATOR = 'x'


class InvalidInstanceError(ValueError):
    """
    Raised when an instance is malformed: indices must be distinct odd
    primes and words must be nonempty bit strings.
    """


class InvalidSequenceError(ValueError):
    """
    Raised for empty index sequences or unknown indices.
    """


def is_prime(n: int) -> bool:
    """
    >>> [n for n in range(20) if is_prime(n)]
    [2, 3, 5, 7, 11, 13, 17, 19]
    """
    if n < 2:
        return False
    divisor = 2
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 1
    return True


class PcpInstance:
    """
    Pairs of nonempty bit words (u_i, v_i) indexed by distinct odd primes.

    >>> PcpInstance({3: ('0', '01'), 5: ('10', '0')}).indices
    (3, 5)
    """
    __slots__ = 'tiles',

    def __init__(self, tiles: Mapping[int, Tuple[str, str]]) -> None:
        if not tiles:
            raise InvalidInstanceError('an instance needs at least one pair')
        self.tiles: Dict[int, Tuple[str, str]] = {}
        for index, (upper, lower) in tiles.items():
            if not (is_prime(index) and index > 2):
                raise InvalidInstanceError(f'index {index} is not an odd prime')
            for word in (upper, lower):
                if not word or set(word) - {'0', '1'}:
                    raise InvalidInstanceError(
                        f'{word!r} is not a nonempty bit string'
                    )
            self.tiles[index] = (upper, lower)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.tiles))

    def upper(self, index: int) -> str:
        return self.tiles[index][0]

    def lower(self, index: int) -> str:
        return self.tiles[index][1]

    def concatenations(self, seq: Sequence[int]) -> Tuple[str, str]:
        """
        The upper and lower words spelled by seq.
        """
        if not seq:
            raise InvalidSequenceError('solutions are nonempty')
        for index in seq:
            if index not in self.tiles:
                raise InvalidSequenceError(f'unknown index {index}')
        return (''.join(self.upper(i) for i in seq),
                ''.join(self.lower(i) for i in seq))

    @property
    def alphabet(self) -> Tuple[Symbol, ...]:
        return (tuple(str(i) for i in self.indices)
                + tuple(f"{i}'" for i in self.indices)
                + (SPECTATOR,))

    def __eq__(self, other) -> bool:
        return isinstance(other, PcpInstance) and self.tiles == other.tiles

    def __repr__(self) -> str:
        return f"PcpInstance({self.tiles!r})"


def pcp_check_solution(inst: PcpInstance, seq: Sequence[int]) -> bool:
    """
    >>> inst = PcpInstance({3: ('00', '100'), 5: ('010', '0'), 7: ('11', '01')})
    >>> pcp_check_solution(inst, (5, 3, 7, 3)), pcp_check_solution(inst, (3,))
    (True, False)
    """
    upper, lower = inst.concatenations(seq)
    return upper == lower


def pcp_brute_force(inst: PcpInstance,
                    max_len: int) -> Optional[Tuple[int, ...]]:
    """
    The shortest solution with at most max_len indices (the first one in
    lexicographic order), if any.
    """
    for length in range(1, max_len + 1):
        for seq in cartesian_product(inst.indices, repeat=length):
            if pcp_check_solution(inst, seq):
                return seq
    return None


class NodeKind(Enum):
    WHITE = 'white'
    GRAY = 'gray'
    SPECTATOR = 'spectator'


class NodeType(NamedTuple):
    kind: NodeKind
    index: Optional[int] = None

    @classmethod
    def parse(cls, label: Symbol) -> 'NodeType':
        """
        >>> NodeType.parse("7'")
        NodeType(kind=<NodeKind.GRAY: 'gray'>, index=7)
        """
        if label == SPECTATOR:
            return cls(NodeKind.SPECTATOR)
        if label.endswith("'"):
            return cls(NodeKind.GRAY, int(label[:-1]))
        return cls(NodeKind.WHITE, int(label))


def pcp_encode_solution(inst: PcpInstance, seq: Sequence[int],
                        fuse_orders: Optional[Sequence[Sequence[int]]] = None
                        ) -> PointedDigraph:
    """
    Encodes seq as a pointed ditree. fuse_orders[k], when given, lists the
    types of the k-th child's fuse from the deepest node up; by default
    fuses follow the order of seq.
    """
    inst.concatenations(seq)
    if fuse_orders is None:
        fuse_orders = [seq[:k] for k in range(len(seq))]
    if len(fuse_orders) != len(seq):
        raise InvalidSequenceError('one fuse order per index is required')

    builder = DigraphBuilder(relation_count=1)
    root = builder.add_node(SPECTATOR)
    for k, index in enumerate(seq):
        fuse = list(fuse_orders[k])
        if sorted(fuse) != sorted(seq[:k]):
            raise InvalidSequenceError(
                f'fuse {fuse} is not a permutation of {list(seq[:k])}'
            )
        previous = None
        below = 1
        for white_type in fuse + [index]:
            node = builder.add_node(str(white_type))
            _add_side_fuse(builder, white_type, below, node)
            if previous is not None:
                builder.add_edge(1, previous, node)
            previous = node
            below *= white_type
        assert previous is not None
        builder.add_edge(1, previous, root)
    pg = builder.build(root)
    logger.debug('Encoded %r with %d nodes', tuple(seq), pg.node_count)
    return pg


def _add_side_fuse(builder: DigraphBuilder, white_type: int, length: int,
                   owner: int) -> None:
    previous = None
    for _ in range(length):
        node = builder.add_node(f"{white_type}'")
        if previous is not None:
            builder.add_edge(1, previous, node)
        previous = node
    assert previous is not None
    builder.add_edge(1, previous, owner)


def expected_signal_times(inst: PcpInstance,
                          seq: Sequence[int]) -> List[Tuple[int, int]]:
    """
    The rounds in which each child of the root emits its first and second
    signal.

    >>> inst = PcpInstance({3: ('00', '100'), 5: ('010', '0'), 7: ('11', '01')})
    >>> expected_signal_times(inst, (5, 3, 7, 3))
    [(1, 5), (5, 15), (15, 105), (105, 315)]
    """
    inst.concatenations(seq)
    times = []
    below = 1
    for index in seq:
        times.append((below, below * index))
        below *= index
    return times


# States of the bit-streaming automaton.

@dataclass(frozen=True)
class BitState:
    """
    A white node's position in u_i (upper) and v_i (lower): 0 while
    waiting, 1..len while emitting that bit, len + 1 once finished.
    """
    label: Symbol
    upper: int
    lower: int


@dataclass(frozen=True)
class IdleState:
    label: Symbol


@dataclass(frozen=True)
class SpectatorState:
    mismatch: bool
    accepted: bool


def first_task_automaton(inst: PcpInstance) -> RuleAutomaton:
    """
    Streams the upper and lower words of the encoded sequence to the root,
    which accepts if both streams agree bit by bit and end together.
    """
    words = {str(i): (inst.upper(i), inst.lower(i)) for i in inst.indices}

    def advance(position: int, length: int, predecessor_position: Optional[int],
                predecessor_length: int, ambiguous: bool) -> int:
        if position == 0:
            if ambiguous:
                return 0
            if predecessor_position is None:
                return 1
            return 1 if predecessor_position == predecessor_length else 0
        return min(position + 1, length + 1)

    def white(q: BitState, n: FrozenSet[Any]) -> BitState:
        upper, lower = words[q.label]
        whites = [s for s in n if isinstance(s, BitState)]
        ambiguous = len(whites) > 1
        pred = whites[0] if len(whites) == 1 else None
        pred_upper, pred_lower = words[pred.label] if pred else ('', '')
        return BitState(
            q.label,
            advance(q.upper, len(upper), pred.upper if pred else None,
                    len(pred_upper), ambiguous),
            advance(q.lower, len(lower), pred.lower if pred else None,
                    len(pred_lower), ambiguous),
        )

    def spectator(q: SpectatorState, n: FrozenSet[Any]) -> SpectatorState:
        if q.accepted:
            return q
        whites = [s for s in n if isinstance(s, BitState)]
        upper_bits = set()
        lower_bits = set()
        finished = True
        for s in whites:
            upper, lower = words[s.label]
            if 1 <= s.upper <= len(upper):
                upper_bits.add(upper[s.upper - 1])
            if 1 <= s.lower <= len(lower):
                lower_bits.add(lower[s.lower - 1])
            finished = (finished and s.upper == len(upper) + 1
                        and s.lower == len(lower) + 1)
        mismatch = (q.mismatch or upper_bits != lower_bits
                    or len(upper_bits) > 1)
        return SpectatorState(mismatch,
                              bool(whites) and finished and not mismatch)

    def rule(_sigma: Symbol, q: Any, neighborhood: Neighborhood) -> Any:
        n, = neighborhood
        if isinstance(q, BitState):
            return white(q, n)
        if isinstance(q, SpectatorState):
            return spectator(q, n)
        return q

    def successors(q: Any) -> Iterable[Any]:
        if isinstance(q, BitState):
            upper, lower = words[q.label]
            return {BitState(q.label, u, v)
                    for u in _forward(q.upper, len(upper))
                    for v in _forward(q.lower, len(lower))}
        if isinstance(q, SpectatorState):
            if q.accepted:
                return {q}
            return {SpectatorState(q.mismatch or m, a and not (q.mismatch or m))
                    for m in (False, True) for a in (False, True)}
        return {q}

    init: Dict[Symbol, Any] = {}
    for label in inst.alphabet:
        node_type = NodeType.parse(label)
        if node_type.kind is NodeKind.WHITE:
            init[label] = BitState(label, 0, 0)
        elif node_type.kind is NodeKind.GRAY:
            init[label] = IdleState(label)
        else:
            init[label] = SpectatorState(False, False)

    return RuleAutomaton(
        1, inst.alphabet, init, rule,
        lambda q: isinstance(q, SpectatorState) and q.accepted,
        successors=successors, name='pcp-words',
    )


def _forward(position: int, length: int) -> Iterable[int]:
    if position == 0:
        return (0, 1)
    return (min(position + 1, length + 1),)


# States of the fuse-checking automaton.

class Phase(IntEnum):
    WAITING = 0
    # First signal.
    SENT_FIRST = 1
    BETWEEN = 2
    # Pre-signal: the successor on the fuse may start.
    PRE_SECOND = 3
    # Second signal.
    SENT_SECOND = 4
    DONE = 5


class RootPhase(Enum):
    START = 'start'
    FIRST = 'first'
    LOOP = 'loop'
    ACCEPT = 'accept'
    REJECT = 'reject'


@dataclass(frozen=True)
class SideState:
    """
    A gray node of type i. It lights up one round after its predecessor
    and fires i rounds after its predecessor fires; timer counts down to
    the firing (None before it starts, 0 once fired).
    """
    label: Symbol
    lit: bool
    timer: Optional[int]


@dataclass(frozen=True)
class FuseState:
    label: Symbol
    phase: Phase


@dataclass(frozen=True)
class Alarm:
    label: Symbol


@dataclass(frozen=True)
class RootState:
    phase: RootPhase


_PHASE_SUCCESSORS = {
    Phase.WAITING: (Phase.WAITING, Phase.SENT_FIRST),
    Phase.SENT_FIRST: (Phase.BETWEEN, Phase.PRE_SECOND),
    Phase.BETWEEN: (Phase.BETWEEN, Phase.PRE_SECOND),
    Phase.PRE_SECOND: (Phase.SENT_SECOND,),
    Phase.SENT_SECOND: (Phase.DONE,),
    Phase.DONE: (Phase.DONE,),
}

_ROOT_SUCCESSORS = {
    RootPhase.START: (RootPhase.FIRST, RootPhase.REJECT),
    RootPhase.FIRST: (RootPhase.LOOP, RootPhase.REJECT),
    RootPhase.LOOP: (RootPhase.LOOP, RootPhase.ACCEPT, RootPhase.REJECT),
    RootPhase.ACCEPT: (RootPhase.ACCEPT,),
    RootPhase.REJECT: (RootPhase.REJECT,),
}


def second_task_automaton(inst: PcpInstance) -> RuleAutomaton:
    """
    Checks the shape and the lengths of fuses and side fuses through the
    timing of signals.
    """

    def gray(q: SideState, n: FrozenSet[Any]) -> Any:
        if len(n) > 1 or any(not isinstance(s, SideState) or s.label != q.label
                             for s in n):
            return Alarm(q.label)
        if n:
            pred, = n
            pred_lit, pred_fired = pred.lit, pred.timer == 0
        else:
            # The deepest node starts both signals.
            pred_lit = pred_fired = True
        index = NodeType.parse(q.label).index
        assert index is not None
        if q.timer is None:
            timer = index - 1 if pred_fired else None
        else:
            timer = max(q.timer - 1, 0)
        return SideState(q.label, q.lit or pred_lit, timer)

    def white(q: FuseState, n: FrozenSet[Any]) -> Any:
        side_label = q.label + "'"
        whites = [s for s in n if isinstance(s, FuseState)]
        sides = [s for s in n if isinstance(s, SideState)]
        if (len(whites) + len(sides) != len(n) or len(whites) > 1
                or len(sides) > 1
                or any(s.label != side_label for s in sides)):
            return Alarm(q.label)

        side_lit = bool(sides) and sides[0].lit
        countdown = bool(sides) and sides[0].timer == 2
        if whites:
            pred, = whites
            if side_lit != (pred.phase >= Phase.SENT_SECOND):
                return Alarm(q.label)
            may_start = pred.phase == Phase.PRE_SECOND
        else:
            if side_lit != (q.phase != Phase.WAITING):
                return Alarm(q.label)
            may_start = True

        if q.phase == Phase.WAITING:
            if countdown:
                return Alarm(q.label)
            return FuseState(q.label,
                             Phase.SENT_FIRST if may_start else Phase.WAITING)
        if q.phase in (Phase.SENT_FIRST, Phase.BETWEEN):
            return FuseState(q.label,
                             Phase.PRE_SECOND if countdown else Phase.BETWEEN)
        if q.phase == Phase.PRE_SECOND:
            return FuseState(q.label, Phase.SENT_SECOND)
        return FuseState(q.label, Phase.DONE)

    def root(q: RootState, n: FrozenSet[Any]) -> RootState:
        reject = RootState(RootPhase.REJECT)
        if q.phase in (RootPhase.ACCEPT, RootPhase.REJECT):
            return q
        if any(not isinstance(s, FuseState) for s in n):
            return reject
        first = {s.label for s in n if s.phase == Phase.SENT_FIRST}
        second = {s.label for s in n if s.phase == Phase.SENT_SECOND}
        if len(first) > 1 or len(second) > 1:
            return reject
        if q.phase == RootPhase.START:
            return RootState(RootPhase.FIRST)
        if q.phase == RootPhase.FIRST:
            return RootState(RootPhase.LOOP) if first and not second else reject
        if first and not second:
            return reject
        if second and not first:
            if all(s.phase >= Phase.SENT_SECOND for s in n):
                return RootState(RootPhase.ACCEPT)
            return reject
        return q

    def rule(_sigma: Symbol, q: Any, neighborhood: Neighborhood) -> Any:
        n, = neighborhood
        if isinstance(q, Alarm):
            return q
        if any(isinstance(s, Alarm) for s in n):
            if isinstance(q, RootState):
                return RootState(RootPhase.REJECT)
            return Alarm(q.label)
        if isinstance(q, SideState):
            return gray(q, n)
        if isinstance(q, FuseState):
            return white(q, n)
        return root(q, n)

    def successors(q: Any) -> Iterable[Any]:
        if isinstance(q, Alarm):
            return {q}
        if isinstance(q, RootState):
            return {RootState(p) for p in _ROOT_SUCCESSORS[q.phase]}
        if isinstance(q, FuseState):
            return ({FuseState(q.label, p) for p in _PHASE_SUCCESSORS[q.phase]}
                    | {Alarm(q.label)})
        index = NodeType.parse(q.label).index
        assert index is not None
        if q.timer is None:
            timers: Tuple[Optional[int], ...] = (None, index - 1)
        else:
            timers = (max(q.timer - 1, 0),)
        lits = (True,) if q.lit else (False, True)
        return ({SideState(q.label, lit, timer)
                 for lit in lits for timer in timers}
                | {Alarm(q.label)})

    init: Dict[Symbol, Any] = {}
    for label in inst.alphabet:
        node_type = NodeType.parse(label)
        if node_type.kind is NodeKind.WHITE:
            init[label] = FuseState(label, Phase.WAITING)
        elif node_type.kind is NodeKind.GRAY:
            init[label] = SideState(label, False, None)
        else:
            init[label] = RootState(RootPhase.START)

    return RuleAutomaton(
        1, inst.alphabet, init, rule,
        lambda q: isinstance(q, RootState) and q.phase is RootPhase.ACCEPT,
        successors=successors, name='pcp-fuses',
    )


def pcp_to_automaton(inst: PcpInstance) -> RuleAutomaton:
    """
    Accepts the encoding of a candidate sequence iff it is a solution.
    """
    return product(first_task_automaton(inst), second_task_automaton(inst),
                   Mode.INTERSECTION)
