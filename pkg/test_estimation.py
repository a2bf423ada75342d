"""
Tests for exact and sampled depth statistics and the bound-gap reports
"""

from fractions import Fraction

import pytest

from estimation import (
    Method,
    bound_gap_report,
    exact_dn,
    exact_histogram,
    lichev_fraction,
    sampled_dn,
    sampled_t_stars,
    t_star_distribution,
)
from estimation.depth import sample_t_star
from popsort import ExhaustiveCapError, UnknownIdentifierError, count_sorts, sample_generator
from popsort.random_perm import fisher_yates


@pytest.mark.parametrize("n,expected", [
    (1, Fraction(0)),
    (2, Fraction(1, 2)),
    (3, Fraction(7, 6)),
])
def test_exact_dn(n, expected):
    estimate = exact_dn(n, threads=1)
    assert estimate.method is Method.EXACT
    assert estimate.mean_t_star == expected
    assert estimate.ratio == expected / n
    assert estimate.samples is None


def test_exact_histograms():
    assert exact_histogram(1, threads=1) == {0: 1}
    assert exact_histogram(2, threads=1) == {0: 1, 1: 1}
    assert exact_histogram(3, threads=1) == {0: 1, 1: 3, 2: 2}


def test_exact_histogram_sums_to_factorial():
    histogram = exact_histogram(7, threads=2)
    assert sum(histogram.values()) == 5040
    assert list(histogram) == list(range(7))
    assert histogram[0] == 1


def test_exact_is_refused_above_cap():
    with pytest.raises(ExhaustiveCapError) as excinfo:
        exact_histogram(5, cap=4)
    assert excinfo.value.cap == 4


def test_single_sample():
    estimate = sampled_dn(6, samples=1, seed=11, threads=1)
    expected = count_sorts(fisher_yates(6, sample_generator(11, 0)))
    assert estimate.mean_t_star == expected
    assert estimate.std_error == 0.0


def test_sampled_dn_agrees_with_exact():
    estimate = sampled_dn(3, samples=20000, seed=7, threads=2)
    assert abs(estimate.mean_t_star - 7 / 6) <= 4 * estimate.std_error
    assert abs(estimate.mean_t_star - 7 / 6) < 0.02

    two = sampled_dn(2, samples=20000, seed=8, threads=2)
    assert abs(two.mean_t_star - 0.5) < 0.02


def test_sampling_does_not_depend_on_threads():
    one = sampled_t_stars(20, samples=300, seed=5, threads=1)
    four = sampled_t_stars(20, samples=300, seed=5, threads=4)
    assert one.tolist() == four.tolist()
    assert sampled_dn(20, 300, 5, threads=1) == sampled_dn(20, 300, 5, threads=3)


def test_engines_see_the_same_sample():
    for index in range(5):
        assert sample_t_star(40, 3, index, small_n=64) == sample_t_star(40, 3, index, small_n=1)


def test_sampling_validation():
    with pytest.raises(ValueError):
        sampled_dn(5, samples=0, seed=1)
    with pytest.raises(ValueError):
        sampled_dn(5, samples=10, seed=-1)
    with pytest.raises(ValueError):
        t_star_distribution(5, 'sampled')


def test_sampled_distribution():
    histogram = t_star_distribution(4, 'sampled', samples=500, seed=9, threads=1)
    assert sum(histogram.values()) == 500
    assert set(histogram) == {0, 1, 2, 3}
    assert t_star_distribution(3, 'exact', threads=1) == {0: 1, 1: 3, 2: 2}


def test_lichev_fraction_small_n():
    assert lichev_fraction(9, samples=50, seed=1, threads=1) == 1.0
    assert lichev_fraction(100, samples=5, seed=1, identity_only=True) == 0.0
    with pytest.raises(UnknownIdentifierError):
        lichev_fraction(100, samples=5, seed=1, form='sideways')


def test_bound_gap_small():
    report = bound_gap_report(2, samples=20, seed=4, threads=1)
    assert len(report.records) == 20
    for record in report.records:
        if record.t_star == 0:
            assert (record.best_bound, record.i, record.k) == (0, None, None)
        else:
            assert (record.t_star, record.best_bound, record.gap) == (1, 1, 0)
    assert report.summary.consistent
    assert report.summary.lichev_fraction == 1.0


def test_bound_gap_does_not_depend_on_threads():
    one = bound_gap_report(60, samples=12, seed=21, threads=1)
    two = bound_gap_report(60, samples=12, seed=21, threads=2)
    assert one == two
    assert one.summary.consistent


@pytest.mark.slow
def test_sampled_dn_three_with_hundred_thousand_samples():
    estimate = sampled_dn(3, samples=10 ** 5, seed=20240601)
    assert abs(estimate.mean_t_star - 7 / 6) <= 4 * estimate.std_error


@pytest.mark.slow
def test_exact_dn_nine():
    estimate = exact_dn(9)
    assert sum(exact_histogram(9).values()) == 362880
    assert 0 < estimate.ratio < 1


@pytest.mark.slow
def test_large_n_bound_gap():
    report = bound_gap_report(5000, samples=100, seed=20240601)
    assert all(record.t_star >= record.best_bound for record in report.records)
    assert report.summary.min_gap >= 0
    assert report.summary.mean_t_star_ratio >= 0.55


@pytest.mark.slow
def test_large_n_lichev_fraction():
    assert lichev_fraction(10 ** 4, samples=100, seed=20240601) >= 0.99
