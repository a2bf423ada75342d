"""
Pop-stack sorting - Theory Verifiers

Exhaustive and sample-wise checks of the observations, the pop-stop lemma
and the sort-count lower bound.
"""

from .bounds import (
    BoundQuery,
    BoundWitness,
    BOUND_VARIANTS,
    theorem_bound,
    all_bounds,
    best_bound,
    best_bound_from_inverse,
)
from .lichev import EVENT_FORMS, check_lichev_event, lichev_event_from_inverse
from .report import ClaimReport, Counterexample
from .claims import CLAIMS, WINDOWS, DEFAULT_WINDOW, ClaimOptions, get_claim, window_size
from .runner import (
    SWEEP,
    run_claim,
    run_sweep,
    verify_permutation,
    verify_no_long_runs,
    verify_pivot_center_origin,
    verify_motion_persistence,
    verify_pop_stop,
    verify_pivot_window,
    verify_value_window,
    verify_sort_bound,
    verify_pop_structure,
)

__version__ = '1.0.0'
__all__ = [
    'BoundQuery',
    'BoundWitness',
    'BOUND_VARIANTS',
    'theorem_bound',
    'all_bounds',
    'best_bound',
    'best_bound_from_inverse',
    'EVENT_FORMS',
    'check_lichev_event',
    'lichev_event_from_inverse',
    'ClaimReport',
    'Counterexample',
    'CLAIMS',
    'WINDOWS',
    'DEFAULT_WINDOW',
    'ClaimOptions',
    'get_claim',
    'window_size',
    'SWEEP',
    'run_claim',
    'run_sweep',
    'verify_permutation',
    'verify_no_long_runs',
    'verify_pivot_center_origin',
    'verify_motion_persistence',
    'verify_pop_stop',
    'verify_pivot_window',
    'verify_value_window',
    'verify_sort_bound',
    'verify_pop_structure',
]
