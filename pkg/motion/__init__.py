"""
Pop-stack sorting - Motion Analysis

Classifies what every element does in each sort and follows elements
through a trace.
"""

from .classify import (
    MotionKind,
    Motion,
    MotionTable,
    InteriorMode,
    STATIONARY_KINDS,
    PIVOT_MOVES,
    classify_transition,
    classify_trace,
    apply_motions,
    target_positions,
    is_interior,
)
from .order_stats import (
    OrderProfile,
    is_lr_max,
    is_rl_min,
    smaller_left_count,
    larger_right_count,
    order_profile,
)
from .trajectory import TrajectoryEntry, element_trajectory, pivot_count, arrival_sort

__version__ = '1.0.0'
__all__ = [
    'MotionKind',
    'Motion',
    'MotionTable',
    'InteriorMode',
    'STATIONARY_KINDS',
    'PIVOT_MOVES',
    'classify_transition',
    'classify_trace',
    'apply_motions',
    'target_positions',
    'is_interior',
    'OrderProfile',
    'is_lr_max',
    'is_rl_min',
    'smaller_left_count',
    'larger_right_count',
    'order_profile',
    'TrajectoryEntry',
    'element_trajectory',
    'pivot_count',
    'arrival_sort',
]
