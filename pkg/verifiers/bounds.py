"""
Lower bounds on the number of Pop passes

For the element n - i + 1 sitting at position k of sigma_1:

    i = 1:   t* >= floor(2(n - k) / 5) + ceil((n - k) / 5) + 1
    i >= 2:  t* >= 2i - 3 + floor(2d / 5) + ceil(d / 5),   d = n - k - 5i + 7

The i >= 2 branch is not applicable when d < 0. The "proof" variant uses
2i - 4 in place of 2i - 3.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from popsort import Permutation, pop
from popsort.errors import UnknownIdentifierError

BOUND_VARIANTS = {
    'stated': 3,
    'proof': 4,
}


@dataclass(frozen=True)
class BoundQuery:
    n: int
    i: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 1 <= self.i <= self.n:
            raise ValueError(f"i must be in 1..{self.n}, got {self.i}")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"k must be in 1..{self.n}, got {self.k}")


@dataclass(frozen=True)
class BoundWitness:
    i: Optional[int]
    k: Optional[int]
    bound: int


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _check_variant(variant: str):
    if variant not in BOUND_VARIANTS:
        raise UnknownIdentifierError("bound variant", variant, BOUND_VARIANTS)


def theorem_bound(q: BoundQuery, variant: str = 'stated') -> Optional[int]:
    """
    Evaluate the bound for one (n, i, k)

    Returns:
        The bound, or None when the i >= 2 branch has a negative travel term
    """
    _check_variant(variant)
    if q.i == 1:
        travel = q.n - q.k
        return (2 * travel) // 5 + _ceil_div(travel, 5) + 1

    d = q.n - q.k - 5 * q.i + 7
    if d < 0:
        return None
    return 2 * q.i - BOUND_VARIANTS[variant] + (2 * d) // 5 + _ceil_div(d, 5)


def _max_applicable_i(n: int) -> int:
    # d >= 0 needs 5i <= n - k + 7 <= n + 6
    return max(1, min(n, (n + 6) // 5))


def _bounds_from_positions(n: int, position_of, variant: str) -> List[BoundWitness]:
    witnesses = []
    for i in range(1, _max_applicable_i(n) + 1):
        k = int(position_of(n - i + 1))
        bound = theorem_bound(BoundQuery(n, i, k), variant)
        if bound is not None:
            witnesses.append(BoundWitness(i, k, bound))
    return witnesses


def _best(witnesses: Sequence[BoundWitness]) -> BoundWitness:
    best = BoundWitness(None, None, 0)
    for witness in witnesses:
        if witness.bound > best.bound:
            best = witness
    return best


def all_bounds(p: Permutation, variant: str = 'stated') -> List[BoundWitness]:
    """Every applicable per-i bound, read from sigma_1 = pop(p)"""
    _check_variant(variant)
    sigma_1 = pop(p)
    return _bounds_from_positions(p.n, sigma_1.position_of, variant)


def best_bound(p: Permutation, variant: str = 'stated') -> BoundWitness:
    """
    Largest applicable bound and its witness (smallest i on ties)

    Raises:
        ValueError: p is the increasing permutation
    """
    if p.is_identity():
        raise ValueError("best_bound is undefined on the increasing permutation")
    return _best(all_bounds(p, variant))


def best_bound_from_inverse(sigma_1_inverse: np.ndarray, variant: str = 'stated') -> BoundWitness:
    """best_bound when sigma_1's inverse array (index = value) is already known"""
    _check_variant(variant)
    n = sigma_1_inverse.size - 1
    return _best(_bounds_from_positions(n, sigma_1_inverse.__getitem__, variant))
