"""
Construction families

Two block-structured permutation families whose extreme elements pivot
many times, and the trace metrics measured on them.

Asymmetric (n = 5k):  S1 = 1..k, S2 = k+1..2k, S3 = 2k+1..4k, S4 = 4k+1..5k.
    k blocks drawing (S4, S3, S2, S3), then S1 ascending.
Symmetric (n = 4k-1): S1 = 1..k, S2 = k+1..3k-1, S3 = 3k..4k-1.
    k-1 blocks drawing (S3, S2, S1, S2), then a final (S3, S2, S1).
Each draw takes the largest unused element of its set.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

import pandas as pd

from motion import arrival_sort, classify_trace, pivot_count
from popsort import Permutation, SortTrace, from_values, sort_trace


class Family(str, Enum):
    ASYMMETRIC = 'asymmetric'
    SYMMETRIC = 'symmetric'


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        object.__setattr__(self, 'family', Family(self.family))

    @property
    def n(self) -> int:
        return 5 * self.k if self.family is Family.ASYMMETRIC else 4 * self.k - 1

    @property
    def designated_values(self) -> Tuple[int, ...]:
        if self.family is Family.ASYMMETRIC:
            return (self.n,)
        return (1, self.n)


@dataclass(frozen=True)
class ElementMetrics:
    value: int
    pivot_count: int
    arrival_sort: int


@dataclass(frozen=True)
class FamilyMetrics:
    spec: FamilySpec
    permutation: Permutation
    t_star: int
    elements: Tuple[ElementMetrics, ...]
    last_movers: Tuple[int, ...] = ()


def family_blocks(spec: FamilySpec) -> Dict[str, range]:
    """The sets S1.. of the construction"""
    k = spec.k
    if spec.family is Family.ASYMMETRIC:
        return {
            'S1': range(1, k + 1),
            'S2': range(k + 1, 2 * k + 1),
            'S3': range(2 * k + 1, 4 * k + 1),
            'S4': range(4 * k + 1, 5 * k + 1),
        }
    return {
        'S1': range(1, k + 1),
        'S2': range(k + 1, 3 * k),
        'S3': range(3 * k, 4 * k),
    }


def _draw(pattern: List[str], blocks: Dict[str, range]) -> List[int]:
    remaining = {name: list(block) for name, block in blocks.items()}
    return [remaining[name].pop() for name in pattern]


def asymmetric_family(k: int) -> Permutation:
    spec = FamilySpec(Family.ASYMMETRIC, k)
    blocks = family_blocks(spec)
    values = _draw(['S4', 'S3', 'S2', 'S3'] * k, blocks)
    values.extend(blocks['S1'])
    return from_values(values)


def symmetric_family(k: int) -> Permutation:
    spec = FamilySpec(Family.SYMMETRIC, k)
    pattern = ['S3', 'S2', 'S1', 'S2'] * (k - 1) + ['S3', 'S2', 'S1']
    return from_values(_draw(pattern, family_blocks(spec)))


def generate(spec: FamilySpec) -> Permutation:
    if spec.family is Family.ASYMMETRIC:
        return asymmetric_family(spec.k)
    return symmetric_family(spec.k)


def _last_movers(trace: SortTrace) -> Tuple[int, ...]:
    """Values whose position changes in the final sort"""
    if trace.t_star == 0:
        return ()
    before, after = trace.steps[-2].values, trace.steps[-1].values
    return tuple(sorted(v for v, w in zip(before, after) if v != w))


def family_metrics(spec: FamilySpec) -> FamilyMetrics:
    """
    Sort the family member and measure its designated elements

    Args:
        spec: Family and block parameter k

    Returns:
        FamilyMetrics with t*, pivot_count / arrival_sort of value n
        (asymmetric) or of values 1 and n (symmetric), and the values
        moved by the last sort
    """
    permutation = generate(spec)
    trace = sort_trace(permutation)
    tables = classify_trace(trace)
    elements = tuple(
        ElementMetrics(value, pivot_count(trace, value, tables), arrival_sort(trace, value))
        for value in spec.designated_values
    )
    return FamilyMetrics(spec, permutation, trace.t_star, elements, _last_movers(trace))


def plot_data(spec: FamilySpec) -> pd.DataFrame:
    """(position, value) points of the family member"""
    permutation = generate(spec)
    return pd.DataFrame({
        'position': range(1, permutation.n + 1),
        'value': permutation.values,
    })
