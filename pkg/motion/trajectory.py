"""
Per-element trajectories across a sort trace
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

from popsort import SortTrace
from popsort.errors import UnknownValueError

from .classify import Motion, MotionTable, PIVOT_MOVES, classify_trace


@dataclass(frozen=True)
class TrajectoryEntry:
    """Position in sigma_t and the motion of sort t (None for t = 0)"""

    t: int
    position: int
    motion: Optional[Motion]


def _check_value(trace: SortTrace, value: int):
    if isinstance(value, bool) or not isinstance(value, int) or not 1 <= value <= trace.n:
        raise UnknownValueError(value, trace.n)


def element_trajectory(
    trace: SortTrace,
    value: int,
    tables: Optional[Sequence[MotionTable]] = None
) -> List[TrajectoryEntry]:
    """
    Follow one value through a trace

    Args:
        trace: SortTrace to follow
        value: Element to follow
        tables: Precomputed classify_trace(trace), if available

    Returns:
        Entries for t = 0..t*
    """
    _check_value(trace, value)
    if tables is None:
        tables = classify_trace(trace)

    entries = [TrajectoryEntry(0, trace.steps[0].position_of(value), None)]
    for t in range(1, trace.t_star + 1):
        motion = tables[t - 1].motion_of(value)
        position = trace.steps[t].position_of(value)
        if position != entries[-1].position + motion.offset:
            raise RuntimeError(
                f"value {value} moved to {position} in sort {t}, "
                f"but its motion {motion} implies {entries[-1].position + motion.offset}"
            )
        entries.append(TrajectoryEntry(t, position, motion))
    return entries


def pivot_count(trace: SortTrace, value: int, tables: Optional[Sequence[MotionTable]] = None) -> int:
    """Sorts in which value itself pivots (left or right); pivot centers are not counted"""
    trajectory = element_trajectory(trace, value, tables)
    return sum(1 for entry in trajectory[1:] if entry.motion.kind in PIVOT_MOVES)


def arrival_sort(trace: SortTrace, value: int) -> int:
    """Least t with value at position value in every sigma_t' for t' >= t"""
    _check_value(trace, value)
    arrival = trace.t_star
    for t in range(trace.t_star, -1, -1):
        if trace.steps[t].position_of(value) != value:
            break
        arrival = t
    return arrival
