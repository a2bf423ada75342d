"""
Vectorized Pop for large n

Array counterparts of pop / count_sorts used by the sampling statistics,
where n runs into the thousands and the tuple engine is too slow.
Values are 1..n in an integer array; results match the tuple engine exactly.
"""

from typing import Tuple

import numpy as np

from .errors import TraceLimitError


def _run_starts(a: np.ndarray) -> np.ndarray:
    """True where a maximal decreasing run starts"""
    starts = np.empty(a.size, dtype=bool)
    starts[0] = True
    np.greater(a[1:], a[:-1], out=starts[1:])
    return starts


def _reverse_runs(a: np.ndarray, starts_mask: np.ndarray) -> np.ndarray:
    n = a.size
    starts = np.flatnonzero(starts_mask)
    ends = np.empty_like(starts)
    ends[:-1] = starts[1:] - 1
    ends[-1] = n - 1
    run_id = np.cumsum(starts_mask) - 1
    source = starts[run_id] + ends[run_id] - np.arange(n)
    return a[source]


def pop_array(a: np.ndarray) -> np.ndarray:
    """Pop on an array of values"""
    if a.size < 2:
        return a.copy()
    return _reverse_runs(a, _run_starts(a))


def count_sorts_array(a: np.ndarray) -> int:
    """
    Number of pop passes to reach the increasing permutation

    Raises:
        TraceLimitError: more than n passes would be needed
    """
    n = a.size
    if n < 2:
        return 0
    current = a
    t = 0
    while True:
        starts_mask = _run_starts(current)
        if starts_mask.all():
            return t
        if t == n:
            raise TraceLimitError(f"array of length {n} still unsorted after {n} pop passes")
        current = _reverse_runs(current, starts_mask)
        t += 1


def inverse_array(a: np.ndarray) -> np.ndarray:
    """inv[v] = 1-indexed position of value v (index 0 unused)"""
    inv = np.zeros(a.size + 1, dtype=np.int64)
    inv[a] = np.arange(1, a.size + 1)
    return inv


def first_sort(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """sigma_1 and its inverse"""
    sigma_1 = pop_array(a)
    return sigma_1, inverse_array(sigma_1)
