"""
Tests for the lower bounds, the large-element event and the claim verifiers
"""

import numpy as np
import pytest

from motion import InteriorMode
from popsort import Permutation, UnknownIdentifierError, identity, parse_permutation
from verifiers import (
    CLAIMS,
    SWEEP,
    BoundQuery,
    BoundWitness,
    ClaimOptions,
    all_bounds,
    best_bound,
    best_bound_from_inverse,
    check_lichev_event,
    get_claim,
    lichev_event_from_inverse,
    run_claim,
    run_sweep,
    theorem_bound,
    verify_motion_persistence,
    verify_no_long_runs,
    verify_permutation,
    verify_pivot_center_origin,
    verify_pivot_window,
    verify_pop_stop,
    verify_pop_structure,
    verify_sort_bound,
    verify_value_window,
    window_size,
)
from popsort.kernels import first_sort


def perm(text: str) -> Permutation:
    return parse_permutation(text)


# --- bounds -----------------------------------------------------------------

def test_theorem_bound_formula():
    assert theorem_bound(BoundQuery(n=10, i=1, k=1)) == 6
    assert theorem_bound(BoundQuery(n=20, i=2, k=1)) == 11
    assert theorem_bound(BoundQuery(n=6, i=2, k=5)) is None


def test_theorem_bound_proof_variant_is_one_lower():
    query = BoundQuery(n=20, i=2, k=1)
    assert theorem_bound(query, 'proof') == theorem_bound(query) - 1
    assert theorem_bound(BoundQuery(10, 1, 1), 'proof') == 6


@pytest.mark.parametrize("variant", ['stated', 'proof'])
def test_theorem_bound_never_grows_with_k(variant):
    for n in range(1, 31):
        for i in range(1, n + 1):
            for k in range(1, n):
                here = theorem_bound(BoundQuery(n, i, k), variant)
                further = theorem_bound(BoundQuery(n, i, k + 1), variant)
                if here is None or further is None:
                    continue
                assert here >= further, (n, i, k)


def test_bound_query_validation():
    with pytest.raises(ValueError):
        BoundQuery(n=5, i=6, k=1)
    with pytest.raises(ValueError):
        BoundQuery(n=5, i=1, k=0)
    with pytest.raises(UnknownIdentifierError):
        theorem_bound(BoundQuery(5, 1, 1), 'guess')


def test_best_bound_examples():
    assert best_bound(perm("561234")) == BoundWitness(i=1, k=3, bound=3)
    assert BoundWitness(i=2, k=1, bound=2) in all_bounds(perm("561234"))
    assert best_bound(perm("21")) == BoundWitness(i=1, k=2, bound=1)
    assert best_bound(perm("213")) == BoundWitness(i=1, k=3, bound=1)


def test_best_bound_rejects_identity():
    with pytest.raises(ValueError):
        best_bound(identity(4))


def test_best_bound_from_inverse_agrees():
    p = perm("471836952")
    _, inverse = first_sort(np.asarray(p.values))
    assert best_bound_from_inverse(inverse) == best_bound(p)


# --- large-element event --------------------------------------------------------

def test_lichev_event_small_and_sorted_inputs():
    assert check_lichev_event(perm("471836952"))
    assert check_lichev_event(identity(9))
    assert not check_lichev_event(identity(100))
    reverse = Permutation(tuple(range(100, 0, -1)))
    assert not check_lichev_event(reverse)


def test_lichev_event_forms():
    _, inverse = first_sort(np.arange(1, 101))
    assert not lichev_event_from_inverse(inverse, 'displacement')
    with pytest.raises(UnknownIdentifierError):
        lichev_event_from_inverse(inverse, 'sideways')
    with pytest.raises(ValueError):
        check_lichev_event(identity(1))


# --- windows and options ----------------------------------------------------

def test_window_catalog():
    assert [window_size('ceil-half', s) for s in (2, 3, 4, 5)] == [1, 1, 2, 2]
    assert window_size('floor-half-plus-one', 4) == 3
    assert window_size('within-i-minus-1', 4) == 2
    assert window_size('first-i', 4) == 3
    with pytest.raises(UnknownIdentifierError):
        window_size('everything', 2)


def test_claim_options_validation():
    with pytest.raises(UnknownIdentifierError):
        ClaimOptions(window='nope')
    with pytest.raises(ValueError):
        ClaimOptions(s_min=0)
    with pytest.raises(UnknownIdentifierError):
        get_claim('obs-9.9')


# --- claims -------------------------------------------------------------------

def test_no_long_runs_trivial_and_single():
    report = verify_no_long_runs(1, threads=1)
    assert report.checked_count == 1
    assert report.holds

    report = verify_permutation('obs-2.1', perm("471836952"))
    assert report.checked_count == 1
    assert report.parameters == {'permutation': "4,7,1,8,3,6,9,5,2"}
    assert report.holds


def test_pivot_center_origin_small():
    assert verify_pivot_center_origin(2, threads=1).holds
    assert verify_pivot_center_origin(6, threads=1).holds
    assert verify_permutation('obs-3.1', perm("471836952")).holds


def test_motion_persistence_boundary_gap():
    strict = verify_motion_persistence(6, InteriorMode.STRICT, threads=1)
    assert not strict.holds
    assert strict.contains((3, 1, 2), 2, 2)
    assert strict.parameters == {'n_max': 6, 'mode': 'strict'}

    weak = verify_motion_persistence(6, InteriorMode.WEAK, threads=1)
    assert weak.holds
    assert weak.checked_count == 1 + 2 + 6 + 24 + 120 + 720


def test_motion_persistence_vacuous_at_two():
    assert verify_motion_persistence(2, InteriorMode.STRICT, threads=1).holds


def test_counterexamples_are_canonically_ordered():
    report = verify_motion_persistence(5, InteriorMode.STRICT, threads=1)
    keys = [c.sort_key() for c in report.counterexamples]
    assert keys == sorted(keys)


def test_pop_stop_small():
    assert verify_pop_stop(6, threads=1).holds
    assert verify_permutation('lemma-3.3', perm("312")).holds
    assert verify_permutation('lemma-3.3', perm("471836952")).holds


def test_windows_small():
    assert verify_pivot_window(2, threads=1).holds
    assert verify_pivot_window(6, threads=1).holds
    assert verify_value_window(6, threads=1).holds


def test_sort_bound_small():
    report = verify_sort_bound(6, threads=1)
    assert report.holds
    assert report.parameters == {'n_max': 6, 'variant': 'stated'}
    assert verify_permutation('thm-3.4', perm("561234")).holds
    assert verify_permutation('thm-3.4', perm("21")).holds


def test_pop_structure_small():
    assert verify_pop_structure(6, threads=1).holds


def test_sweep_covers_every_claim():
    assert sorted(claim_id for claim_id, _ in SWEEP) == sorted(CLAIMS)
    reports = run_sweep(4, threads=1)
    assert all(report.holds for report in reports)


def test_reports_do_not_depend_on_thread_count():
    options = ClaimOptions(mode=InteriorMode.STRICT)
    one = run_claim('obs-3.2', 6, options, threads=1)
    two = run_claim('obs-3.2', 6, options, threads=2)
    assert one == two


@pytest.mark.slow
def test_sweep_up_to_eight():
    for report in run_sweep(8):
        assert report.holds, report.claim_id
        assert report.checked_count == 46233


@pytest.mark.slow
def test_reports_at_eight_do_not_depend_on_thread_count():
    options = ClaimOptions(mode=InteriorMode.WEAK)
    assert run_claim('obs-3.2', 8, options, threads=1) == run_claim('obs-3.2', 8, options, threads=4)
