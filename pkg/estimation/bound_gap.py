"""
Bound gaps and the large-element event at large n

Only scalar statistics are kept per sample, never the traces.
"""

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from config import load_settings, progress
from popsort.enumeration import rank_ranges
from popsort.kernels import count_sorts_array, first_sort
from popsort.parallel import map_shards
from popsort.random_perm import random_array, sample_generator
from verifiers.bounds import best_bound_from_inverse
from verifiers.lichev import check_form, lichev_event_from_inverse

from .depth import check_sampling


@dataclass(frozen=True)
class BoundGapRecord:
    sample_index: int
    t_star: int
    best_bound: int
    i: Optional[int]
    k: Optional[int]
    lichev_event: bool

    @property
    def gap(self) -> int:
        return self.t_star - self.best_bound


@dataclass(frozen=True)
class BoundGapSummary:
    n: int
    samples: int
    seed: int
    mean_t_star_ratio: float
    mean_bound_ratio: float
    min_gap: int
    lichev_fraction: float

    @property
    def consistent(self) -> bool:
        """t* >= best_bound held for every sample"""
        return self.min_gap >= 0


@dataclass(frozen=True)
class BoundGapReport:
    records: Tuple[BoundGapRecord, ...]
    summary: BoundGapSummary


def _check_large_n(n: int):
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n!r}")


def _gap_shard(task) -> List[BoundGapRecord]:
    n, seed, start, stop, variant = task
    records = []
    for index in range(start, stop):
        values = random_array(n, sample_generator(seed, index))
        _, inverse = first_sort(values)
        t_star = count_sorts_array(values)
        if t_star == 0:
            bound, i, k = 0, None, None
        else:
            witness = best_bound_from_inverse(inverse, variant)
            bound, i, k = witness.bound, witness.i, witness.k
        records.append(BoundGapRecord(
            sample_index=index,
            t_star=t_star,
            best_bound=bound,
            i=i,
            k=k,
            lichev_event=lichev_event_from_inverse(inverse),
        ))
    return records


def bound_gap_report(
    n: int,
    samples: int,
    seed: int,
    threads: Optional[int] = None,
    variant: str = 'stated'
) -> BoundGapReport:
    """
    Compare t* with the best lower bound on sampled permutations

    Args:
        n: Permutation length (>= 2)
        samples: Number of samples
        seed: Master seed
        threads: Worker processes
        variant: Bound variant ('stated' or 'proof')

    Returns:
        Per-sample records and their summary
    """
    _check_large_n(n)
    check_sampling(samples, seed)
    threads = threads or load_settings().threads

    shards = max(1, min(threads * 4, samples))
    tasks = [(n, seed, start, stop, variant) for start, stop in rank_ranges(samples, shards)]
    progress(f"📏 bound gaps for n = {n}: {samples} samples in {len(tasks)} shards")
    records = tuple(r for shard in map_shards(_gap_shard, tasks, threads) for r in shard)

    t_stars = np.array([r.t_star for r in records], dtype=np.int64)
    bounds = np.array([r.best_bound for r in records], dtype=np.int64)
    summary = BoundGapSummary(
        n=n,
        samples=samples,
        seed=seed,
        mean_t_star_ratio=float(t_stars.mean() / n),
        mean_bound_ratio=float(bounds.mean() / n),
        min_gap=int((t_stars - bounds).min()),
        lichev_fraction=float(np.mean([r.lichev_event for r in records])),
    )
    return BoundGapReport(records, summary)


def _lichev_shard(task) -> List[bool]:
    n, seed, start, stop, form = task
    events = []
    for index in range(start, stop):
        _, inverse = first_sort(random_array(n, sample_generator(seed, index)))
        events.append(lichev_event_from_inverse(inverse, form))
    return events


def lichev_fraction(
    n: int,
    samples: int,
    seed: int,
    form: str = 'positional',
    identity_only: bool = False,
    threads: Optional[int] = None
) -> float:
    """
    Fraction of sampled permutations where the large-element event holds

    identity_only replaces every sample by the increasing permutation.
    """
    _check_large_n(n)
    check_sampling(samples, seed)
    check_form(form)

    if identity_only:
        _, inverse = first_sort(np.arange(1, n + 1, dtype=np.int64))
        return 1.0 if lichev_event_from_inverse(inverse, form) else 0.0

    threads = threads or load_settings().threads
    shards = max(1, min(threads * 4, samples // 10))
    tasks = [(n, seed, start, stop, form) for start, stop in rank_ranges(samples, shards)]
    events = [e for shard in map_shards(_lichev_shard, tasks, threads) for e in shard]
    return sum(events) / samples
