"""
Motion classification

Assigns every element a motion kind for one Pop transition, read off the
maximal decreasing run it belongs to in the transition's source.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Tuple

from popsort import Permutation, SortTrace, decreasing_runs
from popsort.errors import LongRunError


class MotionKind(str, Enum):
    SWITCH_LEFT = 'switch_left'
    SWITCH_RIGHT = 'switch_right'
    PIVOT_LEFT = 'pivot_left'
    PIVOT_RIGHT = 'pivot_right'
    PIVOT_CENTER = 'pivot_center'
    STATIONARY_INTERIOR = 'stationary_interior'
    STATIONARY_LEFT_EDGE = 'stationary_left_edge'
    STATIONARY_RIGHT_EDGE = 'stationary_right_edge'
    FIRST_SORT_REVERSAL = 'first_sort_reversal'

    @property
    def mirror(self) -> 'MotionKind':
        """Kind seen under reverse-complement conjugation"""
        return _MIRROR.get(self, self)

    @property
    def is_stationary(self) -> bool:
        return self in STATIONARY_KINDS


_FIXED_OFFSETS = {
    MotionKind.SWITCH_LEFT: -1,
    MotionKind.SWITCH_RIGHT: 1,
    MotionKind.PIVOT_LEFT: -2,
    MotionKind.PIVOT_RIGHT: 2,
    MotionKind.PIVOT_CENTER: 0,
    MotionKind.STATIONARY_INTERIOR: 0,
    MotionKind.STATIONARY_LEFT_EDGE: 0,
    MotionKind.STATIONARY_RIGHT_EDGE: 0,
}

_MIRROR = {
    MotionKind.SWITCH_LEFT: MotionKind.SWITCH_RIGHT,
    MotionKind.SWITCH_RIGHT: MotionKind.SWITCH_LEFT,
    MotionKind.PIVOT_LEFT: MotionKind.PIVOT_RIGHT,
    MotionKind.PIVOT_RIGHT: MotionKind.PIVOT_LEFT,
    MotionKind.STATIONARY_LEFT_EDGE: MotionKind.STATIONARY_RIGHT_EDGE,
    MotionKind.STATIONARY_RIGHT_EDGE: MotionKind.STATIONARY_LEFT_EDGE,
}

STATIONARY_KINDS = frozenset({
    MotionKind.STATIONARY_INTERIOR,
    MotionKind.STATIONARY_LEFT_EDGE,
    MotionKind.STATIONARY_RIGHT_EDGE,
})

PIVOT_MOVES = frozenset({MotionKind.PIVOT_LEFT, MotionKind.PIVOT_RIGHT})


class InteriorMode(str, Enum):
    STRICT = 'strict'
    WEAK = 'weak'


@dataclass(frozen=True)
class Motion:
    """A motion kind with its position offset"""

    kind: MotionKind
    offset: int

    @classmethod
    def of(cls, kind: MotionKind) -> 'Motion':
        return cls(kind, _FIXED_OFFSETS[kind])

    @classmethod
    def first_sort(cls, offset: int) -> 'Motion':
        return cls(MotionKind.FIRST_SORT_REVERSAL, offset)

    @property
    def moves_left(self) -> bool:
        return self.offset < 0

    @property
    def moves_right(self) -> bool:
        return self.offset > 0

    def mirrored(self) -> 'Motion':
        return Motion(self.kind.mirror, -self.offset)

    def __str__(self) -> str:
        if self.kind is MotionKind.FIRST_SORT_REVERSAL:
            return f"{self.kind.value}({self.offset:+d})"
        return self.kind.value


@dataclass(frozen=True)
class MotionTable:
    """
    Motions of one transition

    transition_index is the sort t producing sigma_t from source = sigma_{t-1};
    motions[v - 1] is the motion of value v.
    """

    transition_index: int
    source: Permutation
    motions: Tuple[Motion, ...]

    def motion_of(self, value: int) -> Motion:
        return self.motions[value - 1]

    def items(self) -> Iterator[Tuple[int, Motion]]:
        for index, motion in enumerate(self.motions):
            yield index + 1, motion

    def values_of_kind(self, kind: MotionKind) -> List[int]:
        return [value for value, motion in self.items() if motion.kind is kind]


def is_interior(p: Permutation, i: int, mode: InteriorMode = InteriorMode.STRICT) -> bool:
    """
    Whether sigma(i) sits inside an increasing run

    Strict needs both neighbours with sigma(i-1) < sigma(i) < sigma(i+1);
    Weak lets a missing neighbour count as satisfied.
    """
    n = p.n
    if i < 1 or i > n:
        raise ValueError(f"position {i} out of range 1..{n}")
    values = p.values
    has_left = i > 1
    has_right = i < n
    if mode is InteriorMode.STRICT and not (has_left and has_right):
        return False
    left_ok = not has_left or values[i - 2] < values[i - 1]
    right_ok = not has_right or values[i - 1] < values[i]
    return left_ok and right_ok


def _singleton_motion(position: int, n: int) -> Motion:
    # for n = 1 the element is on both edges; it is reported as the left edge
    # and is its own mirror
    if position == 1:
        return Motion.of(MotionKind.STATIONARY_LEFT_EDGE)
    if position == n:
        return Motion.of(MotionKind.STATIONARY_RIGHT_EDGE)
    # a singleton run away from the edges is strictly interior
    return Motion.of(MotionKind.STATIONARY_INTERIOR)


def classify_transition(source: Permutation, transition_index: int) -> MotionTable:
    """
    Classify every element's motion during sort `transition_index`

    Args:
        source: sigma_{t-1}
        transition_index: t >= 1

    Returns:
        MotionTable

    Raises:
        LongRunError: a run of length >= 4 in the source of a sort t >= 2
    """
    if transition_index < 1:
        raise ValueError(f"transition index must be >= 1, got {transition_index}")

    n = source.n
    values = source.values
    motions: List[Motion] = [None] * n

    for start, length in decreasing_runs(source):
        run = values[start - 1:start - 1 + length]
        if length == 1:
            motions[run[0] - 1] = _singleton_motion(start, n)
        elif length == 2:
            motions[run[0] - 1] = Motion.of(MotionKind.SWITCH_RIGHT)
            motions[run[1] - 1] = Motion.of(MotionKind.SWITCH_LEFT)
        elif length == 3:
            motions[run[0] - 1] = Motion.of(MotionKind.PIVOT_RIGHT)
            motions[run[1] - 1] = Motion.of(MotionKind.PIVOT_CENTER)
            motions[run[2] - 1] = Motion.of(MotionKind.PIVOT_LEFT)
        else:
            if transition_index >= 2:
                raise LongRunError(start, length, transition_index)
            for j, value in enumerate(run):
                motions[value - 1] = Motion.first_sort(length - 1 - 2 * j)

    table = MotionTable(transition_index, source, tuple(motions))
    _check_table(table)
    return table


def target_positions(table: MotionTable) -> Dict[int, int]:
    """value -> position after the transition"""
    source = table.source
    return {
        value: source.position_of(value) + motion.offset
        for value, motion in table.items()
    }


def _check_table(table: MotionTable):
    n = table.source.n
    if sum(motion.offset for motion in table.motions) != 0:
        raise RuntimeError(f"motion offsets of sort {table.transition_index} do not sum to zero")
    targets = sorted(target_positions(table).values())
    if targets != list(range(1, n + 1)):
        raise RuntimeError(f"motion targets of sort {table.transition_index} are not a bijection")


def apply_motions(table: MotionTable) -> Permutation:
    """Move every value by its offset; reproduces pop(source)"""
    out = [0] * table.source.n
    for value, position in target_positions(table).items():
        out[position - 1] = value
    return Permutation(tuple(out))


def classify_trace(trace: SortTrace) -> List[MotionTable]:
    """Tables for sorts 1..t*; entry t - 1 describes sort t"""
    return [
        classify_transition(trace.steps[t - 1], t)
        for t in range(1, trace.t_star + 1)
    ]
