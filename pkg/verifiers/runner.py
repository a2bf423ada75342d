"""
Exhaustive and single-permutation claim runs

The permutation space of each length is cut into contiguous lexicographic
rank ranges; workers scan their ranges independently and the merge sums the
counts and sorts the counterexamples canonically.
"""

import time
from math import factorial
from typing import Any, Dict, List, Optional, Tuple

from motion import InteriorMode
from popsort import Permutation, format_permutation
from popsort.enumeration import iter_rank_range, rank_ranges
from popsort.errors import LongRunError, TraceLimitError
from popsort.parallel import map_shards

from config import load_settings, progress

from .claims import Claim, ClaimOptions, TraceContext, get_claim
from .report import ClaimReport, Counterexample

# below this many permutations a length is scanned as a single shard
MIN_SHARD_SIZE = 2000


def check_permutation(claim: Claim, p: Permutation, options: ClaimOptions) -> List[Counterexample]:
    """Run one claim over one permutation's trace"""
    try:
        ctx = TraceContext(p)
    except TraceLimitError as exc:
        return [Counterexample(p.n, p.values, p.n + 1, None, None, str(exc))]

    try:
        return claim.check(ctx, options)
    except LongRunError as exc:
        source = ctx.steps[exc.transition_index - 1]
        return [ctx.counterexample(exc.transition_index, exc.start, source.at(exc.start), str(exc))]


def _scan_shard(task: Tuple[str, ClaimOptions, int, int, int]) -> Tuple[int, List[Counterexample]]:
    claim_id, options, n, start, stop = task
    claim = get_claim(claim_id)
    checked = 0
    found: List[Counterexample] = []
    for values in iter_rank_range(n, start, stop):
        checked += 1
        found.extend(check_permutation(claim, Permutation(values), options))
    return checked, found


def _parameters(claim: Claim, options: ClaimOptions, scope: Dict[str, Any]) -> Dict[str, Any]:
    parameters = dict(scope)
    for name in claim.options_used:
        value = getattr(options, name)
        parameters[name] = value.value if isinstance(value, InteriorMode) else value
    return parameters


def _finish(claim, options, scope, checked, found, started) -> ClaimReport:
    return ClaimReport(
        claim_id=claim.claim_id,
        parameters=_parameters(claim, options, scope),
        checked_count=checked,
        counterexamples=tuple(sorted(found, key=Counterexample.sort_key)),
        elapsed_seconds=round(time.perf_counter() - started, 6),
    )


def run_claim(
    claim_id: str,
    n_max: int,
    options: Optional[ClaimOptions] = None,
    threads: Optional[int] = None
) -> ClaimReport:
    """
    Check a claim on every permutation of every length 1..n_max

    Args:
        claim_id: Key of verifiers.claims.CLAIMS
        n_max: Largest length scanned
        options: Interior mode, window, s_min and bound variant
        threads: Worker processes (default: POPSTACK_THREADS)

    Returns:
        ClaimReport with canonical counterexample order
    """
    claim = get_claim(claim_id)
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    options = options or ClaimOptions()
    threads = threads or load_settings().threads
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")

    tasks = []
    for n in range(1, n_max + 1):
        total = factorial(n)
        shards = max(1, min(threads * 4, total // MIN_SHARD_SIZE))
        for start, stop in rank_ranges(total, shards):
            tasks.append((claim_id, options, n, start, stop))

    progress(f"🔎 {claim_id}: scanning n <= {n_max} in {len(tasks)} shards on {threads} worker(s)")
    started = time.perf_counter()
    results = map_shards(_scan_shard, tasks, threads)

    checked = sum(count for count, _ in results)
    found = [c for _, shard in results for c in shard]
    report = _finish(claim, options, {'n_max': n_max}, checked, found, started)
    progress(f"✅ {claim_id}: {checked} permutations, {len(report.counterexamples)} counterexample(s)")
    return report


def verify_permutation(
    claim_id: str,
    p: Permutation,
    options: Optional[ClaimOptions] = None
) -> ClaimReport:
    """Single-permutation mode: checked_count is 1"""
    claim = get_claim(claim_id)
    options = options or ClaimOptions()
    started = time.perf_counter()
    found = check_permutation(claim, p, options)
    return _finish(claim, options, {'permutation': format_permutation(p)}, 1, found, started)


def verify_no_long_runs(n_max: int, threads: Optional[int] = None) -> ClaimReport:
    return run_claim('obs-2.1', n_max, ClaimOptions(), threads)


def verify_pivot_center_origin(
    n_max: int,
    mode: InteriorMode = InteriorMode.STRICT,
    threads: Optional[int] = None
) -> ClaimReport:
    return run_claim('obs-3.1', n_max, ClaimOptions(mode=mode), threads)


def verify_motion_persistence(
    n_max: int,
    mode: InteriorMode = InteriorMode.STRICT,
    threads: Optional[int] = None
) -> ClaimReport:
    return run_claim('obs-3.2', n_max, ClaimOptions(mode=mode), threads)


def verify_pop_stop(
    n_max: int,
    mode: InteriorMode = InteriorMode.STRICT,
    threads: Optional[int] = None
) -> ClaimReport:
    return run_claim('lemma-3.3', n_max, ClaimOptions(mode=mode), threads)


def verify_pivot_window(
    n_max: int,
    window: str = 'ceil-half',
    s_min: int = 2,
    threads: Optional[int] = None
) -> ClaimReport:
    return run_claim('pivot-window', n_max, ClaimOptions(window=window, s_min=s_min), threads)


def verify_value_window(
    n_max: int,
    window: str = 'ceil-half',
    s_min: int = 2,
    threads: Optional[int] = None
) -> ClaimReport:
    return run_claim('value-window', n_max, ClaimOptions(window=window, s_min=s_min), threads)


def verify_sort_bound(
    n_max: int,
    variant: str = 'stated',
    threads: Optional[int] = None
) -> ClaimReport:
    return run_claim('thm-3.4', n_max, ClaimOptions(variant=variant), threads)


def verify_pop_structure(n_max: int, threads: Optional[int] = None) -> ClaimReport:
    return run_claim('pop-structure', n_max, ClaimOptions(), threads)


# claim id and the options each is swept with by default
SWEEP = (
    ('obs-2.1', ClaimOptions()),
    ('obs-3.1', ClaimOptions(mode=InteriorMode.STRICT)),
    ('obs-3.2', ClaimOptions(mode=InteriorMode.WEAK)),
    ('lemma-3.3', ClaimOptions(mode=InteriorMode.STRICT)),
    ('pivot-window', ClaimOptions()),
    ('value-window', ClaimOptions()),
    ('thm-3.4', ClaimOptions()),
    ('pop-structure', ClaimOptions()),
)


def run_sweep(n_max: int, threads: Optional[int] = None) -> List[ClaimReport]:
    """Every claim under the reading expected to hold"""
    return [run_claim(claim_id, n_max, options, threads) for claim_id, options in SWEEP]
