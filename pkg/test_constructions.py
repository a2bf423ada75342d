"""
Tests for the block-structured construction families
"""

import pytest

from constructions import (
    ElementMetrics,
    Family,
    FamilySpec,
    asymmetric_family,
    family_blocks,
    family_metrics,
    generate,
    plot_data,
    symmetric_family,
)
from popsort import reverse_complement

ASYMMETRIC_K4 = [20, 16, 8, 15, 19, 14, 7, 13, 18, 12, 6, 11, 17, 10, 5, 9, 1, 2, 3, 4]
SYMMETRIC_K4 = [15, 11, 4, 10, 14, 9, 3, 8, 13, 7, 2, 6, 12, 5, 1]


@pytest.mark.parametrize("k,expected", [
    (1, [5, 4, 2, 3, 1]),
    (2, [10, 8, 4, 7, 9, 6, 3, 5, 1, 2]),
    (4, ASYMMETRIC_K4),
])
def test_asymmetric_family(k, expected):
    assert list(asymmetric_family(k).values) == expected


@pytest.mark.parametrize("k,expected", [
    (1, [3, 2, 1]),
    (2, [7, 5, 2, 4, 6, 3, 1]),
    (4, SYMMETRIC_K4),
])
def test_symmetric_family(k, expected):
    assert list(symmetric_family(k).values) == expected


def test_symmetric_family_is_reverse_complement_invariant():
    for k in range(1, 6):
        p = symmetric_family(k)
        assert reverse_complement(p) == p


def test_family_blocks_partition_the_values():
    for spec in (FamilySpec(Family.ASYMMETRIC, 3), FamilySpec(Family.SYMMETRIC, 3)):
        values = sorted(v for block in family_blocks(spec).values() for v in block)
        assert values == list(range(1, spec.n + 1))


def test_family_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec(Family.ASYMMETRIC, 0)
    with pytest.raises(ValueError):
        FamilySpec('diagonal', 2)
    assert FamilySpec('symmetric', 4).n == 15
    assert generate(FamilySpec('asymmetric', 4)).values == tuple(ASYMMETRIC_K4)


def test_asymmetric_metrics_k4():
    metrics = family_metrics(FamilySpec(Family.ASYMMETRIC, 4))
    assert metrics.t_star == 16
    assert metrics.elements == (ElementMetrics(value=20, pivot_count=7, arrival_sort=12),)


def test_symmetric_metrics_k4():
    metrics = family_metrics(FamilySpec(Family.SYMMETRIC, 4))
    assert metrics.t_star == 10
    assert metrics.elements == (
        ElementMetrics(value=1, pivot_count=5, arrival_sort=9),
        ElementMetrics(value=15, pivot_count=5, arrival_sort=9),
    )


@pytest.mark.parametrize("k", range(1, 13))
def test_asymmetric_metrics_grow_linearly(k):
    metrics = family_metrics(FamilySpec(Family.ASYMMETRIC, k))
    assert metrics.t_star == 4 * k
    element = metrics.elements[0]
    assert element.value == 5 * k
    assert element.pivot_count == 2 * k - 1
    assert element.arrival_sort == 3 * k


def test_smallest_symmetric_member():
    metrics = family_metrics(FamilySpec(Family.SYMMETRIC, 1))
    assert metrics.t_star == 1
    assert [(e.value, e.pivot_count, e.arrival_sort) for e in metrics.elements] == [(1, 1, 1), (3, 1, 1)]


def test_plot_data():
    frame = plot_data(FamilySpec(Family.SYMMETRIC, 4))
    assert list(frame.columns) == ['position', 'value']
    assert frame['position'].tolist() == list(range(1, 16))
    assert frame['value'].tolist() == SYMMETRIC_K4


@pytest.mark.parametrize("k", range(1, 13))
def test_symmetric_metrics_balance_both_ends(k):
    metrics = family_metrics(FamilySpec(Family.SYMMETRIC, k))
    smallest, largest = metrics.elements
    assert (smallest.value, largest.value) == (1, 4 * k - 1)
    assert metrics.t_star <= metrics.spec.n - 1
    assert smallest.pivot_count == largest.pivot_count
    assert smallest.arrival_sort == largest.arrival_sort


def test_last_movers():
    assert family_metrics(FamilySpec(Family.ASYMMETRIC, 1)).last_movers == (1, 2, 3, 4)
    # the pairs 4,5 and 11,12 settle in sort 16
    assert family_metrics(FamilySpec(Family.ASYMMETRIC, 4)).last_movers == (4, 5, 11, 12)
