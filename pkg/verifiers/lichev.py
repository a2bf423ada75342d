"""
The large-element-far-left event after one sort

positional form (default): some integer i with 1 <= i < n^(2/3) has
    sigma_1^{-1}(n - i + 1) < n^(2/3) + 2 log2(n)
displacement form: some element n - i + 1 (any i) has
    |(n - i + 1) - sigma_1^{-1}(n - i + 1)| >= n - n^(2/3) + 1 - 2 log2(n)

Thresholds are real-valued (double precision) and comparisons strict as written.
"""

import math

import numpy as np

from popsort import Permutation
from popsort.errors import UnknownIdentifierError
from popsort.kernels import first_sort

EVENT_FORMS = ('positional', 'displacement')


def check_form(form: str):
    if form not in EVENT_FORMS:
        raise UnknownIdentifierError("event form", form, EVENT_FORMS)


def lichev_event_from_inverse(sigma_1_inverse: np.ndarray, form: str = 'positional') -> bool:
    """Evaluate the event from sigma_1's inverse array (index = value)"""
    check_form(form)
    n = sigma_1_inverse.size - 1
    if n < 2:
        raise ValueError(f"the event needs n >= 2, got {n}")
    power = n ** (2.0 / 3.0)
    log_term = 2.0 * math.log2(n)

    if form == 'positional':
        # 1 <= i < n^(2/3)
        i_max = min(n, math.ceil(power) - 1)
        if i_max < 1:
            return False
        values = np.arange(n, n - i_max, -1)
        return bool(np.any(sigma_1_inverse[values] < power + log_term))

    values = np.arange(1, n + 1)
    displacement = np.abs(values - sigma_1_inverse[1:])
    return bool(np.any(displacement >= n - power + 1 - log_term))


def check_lichev_event(p: Permutation, form: str = 'positional') -> bool:
    """Whether p's first sort leaves a large element far to the left"""
    if p.n < 2:
        raise ValueError(f"the event needs n >= 2, got {p.n}")
    _, inverse = first_sort(np.asarray(p.values, dtype=np.int64))
    return lichev_event_from_inverse(inverse, form)
