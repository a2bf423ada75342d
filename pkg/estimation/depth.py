"""
Sorting depth statistics

D_n is the mean of t* over all permutations of length n. Small n are
enumerated exactly (integer sums, rational mean); large n are sampled with
one independent generator stream per sample index.
"""

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from config import load_settings, progress
from popsort import count_sorts
from popsort.enumeration import iter_rank_range, rank_ranges
from popsort.errors import ExhaustiveCapError
from popsort.kernels import count_sorts_array
from popsort.parallel import map_shards
from popsort.random_perm import fisher_yates, sample_generator

MIN_SHARD_SIZE = 2000


class Method(str, Enum):
    EXACT = 'exact'
    SAMPLED = 'sampled'


@dataclass(frozen=True)
class DnEstimate:
    """
    Exact or sampled mean of t*

    mean_t_star and ratio are Fractions for the exact method, floats otherwise.
    """

    n: int
    method: Method
    mean_t_star: Union[Fraction, float]
    ratio: Union[Fraction, float]
    samples: Optional[int] = None
    std_error: Optional[float] = None
    seed: Optional[int] = None


def _check_n(n: int):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def check_sampling(samples: int, seed: int):
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if seed < 0:
        raise ValueError(f"seed must be a non-negative integer, got {seed}")


def sample_t_star(n: int, seed: int, index: int, small_n: int) -> int:
    """t* of sample `index`; both engines see the same permutation"""
    values = fisher_yates(n, sample_generator(seed, index))
    if n <= small_n:
        return count_sorts(values)
    return count_sorts_array(np.asarray(values, dtype=np.int64))


def _exact_shard(task: Tuple[int, int, int]) -> Counter:
    n, start, stop = task
    counts = Counter()
    for values in iter_rank_range(n, start, stop):
        counts[count_sorts(values)] += 1
    return counts


def _sample_shard(task: Tuple[int, int, int, int, int]) -> List[int]:
    n, seed, start, stop, small_n = task
    return [sample_t_star(n, seed, index, small_n) for index in range(start, stop)]


def _threads(threads: Optional[int]) -> int:
    return threads or load_settings().threads


def exact_histogram(n: int, cap: Optional[int] = None, threads: Optional[int] = None) -> Dict[int, int]:
    """
    Count permutations of length n by t*

    Raises:
        ExhaustiveCapError: n above the exhaustive cap
    """
    _check_n(n)
    cap = cap if cap is not None else load_settings().exhaustive_cap
    if n > cap:
        raise ExhaustiveCapError(n, cap)
    threads = _threads(threads)

    total = factorial(n)
    shards = max(1, min(threads * 4, total // MIN_SHARD_SIZE))
    tasks = [(n, start, stop) for start, stop in rank_ranges(total, shards)]
    progress(f"🔢 exact t* distribution for n = {n}: {total} permutations in {len(tasks)} shards")

    counts = Counter()
    for shard in map_shards(_exact_shard, tasks, threads):
        counts.update(shard)
    return {t: counts.get(t, 0) for t in range(n)}


def sampled_t_stars(n: int, samples: int, seed: int, threads: Optional[int] = None) -> np.ndarray:
    """t* of samples 0..samples-1, in sample-index order"""
    _check_n(n)
    check_sampling(samples, seed)
    threads = _threads(threads)
    small_n = load_settings().small_n

    shards = max(1, min(threads * 4, samples // 100))
    tasks = [(n, seed, start, stop, small_n) for start, stop in rank_ranges(samples, shards)]
    progress(f"🎲 sampling {samples} permutations of length {n} (seed {seed}) in {len(tasks)} shards")

    t_values = [t for shard in map_shards(_sample_shard, tasks, threads) for t in shard]
    return np.asarray(t_values, dtype=np.int64)


def exact_dn(n: int, cap: Optional[int] = None, threads: Optional[int] = None) -> DnEstimate:
    """Exact D_n as a rational number"""
    histogram = exact_histogram(n, cap, threads)
    total = sum(t * count for t, count in histogram.items())
    mean = Fraction(total, factorial(n))
    return DnEstimate(n=n, method=Method.EXACT, mean_t_star=mean, ratio=mean / n)


def sampled_dn(n: int, samples: int, seed: int, threads: Optional[int] = None) -> DnEstimate:
    """
    Monte-Carlo D_n

    Args:
        n: Permutation length
        samples: Number of uniform permutations
        seed: 64-bit master seed
        threads: Worker processes

    Returns:
        DnEstimate with the standard error of the mean (n-1 denominator;
        0 for a single sample)
    """
    t_values = sampled_t_stars(n, samples, seed, threads)
    mean = float(t_values.mean())
    if samples > 1:
        std_error = float(t_values.std(ddof=1) / math.sqrt(samples))
    else:
        std_error = 0.0
    return DnEstimate(
        n=n,
        method=Method.SAMPLED,
        mean_t_star=mean,
        ratio=mean / n,
        samples=samples,
        std_error=std_error,
        seed=seed,
    )


def t_star_distribution(
    n: int,
    method: Union[Method, str] = Method.EXACT,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    threads: Optional[int] = None
) -> Dict[int, int]:
    """Histogram {t*: count} over 0..n-1"""
    method = Method(method)
    if method is Method.EXACT:
        return exact_histogram(n, threads=threads)
    if samples is None or seed is None:
        raise ValueError("the sampled method needs samples and seed")
    t_values = sampled_t_stars(n, samples, seed, threads)
    counts = np.bincount(t_values, minlength=n)
    return {t: int(counts[t]) for t in range(max(n, counts.size))}
