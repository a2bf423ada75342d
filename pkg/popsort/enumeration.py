"""
Lexicographic enumeration of permutations

Successor function, Lehmer-code rank/unrank, and contiguous rank ranges used
to shard exhaustive scans across workers.
"""

from math import factorial
from typing import Iterator, List, Sequence, Tuple


def next_permutation(values: List[int]) -> bool:
    """
    Advance values to its lexicographic successor in place

    Returns:
        False (and leaves values unchanged) when values is the last permutation
    """
    i = len(values) - 2
    while i >= 0 and values[i] > values[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(values) - 1
    while values[j] < values[i]:
        j -= 1
    values[i], values[j] = values[j], values[i]
    values[i + 1:] = reversed(values[i + 1:])
    return True


def unrank(n: int, rank: int) -> List[int]:
    """Permutation of 1..n with the given 0-based lexicographic rank"""
    if rank < 0 or rank >= factorial(n):
        raise ValueError(f"rank {rank} out of range for n = {n}")
    available = list(range(1, n + 1))
    values = []
    for i in range(n, 0, -1):
        block = factorial(i - 1)
        index, rank = divmod(rank, block)
        values.append(available.pop(index))
    return values


def rank(values: Sequence[int]) -> int:
    """0-based lexicographic rank (Lehmer code read in the factorial base)"""
    n = len(values)
    result = 0
    for i, value in enumerate(values):
        smaller_after = sum(1 for later in values[i + 1:] if later < value)
        result += smaller_after * factorial(n - i - 1)
    return result


def rank_ranges(total: int, shards: int) -> List[Tuple[int, int]]:
    """Split [0, total) into at most `shards` contiguous, near-equal ranges"""
    shards = max(1, min(shards, total))
    size, extra = divmod(total, shards)
    ranges = []
    start = 0
    for index in range(shards):
        stop = start + size + (1 if index < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


def iter_rank_range(n: int, start: int, stop: int) -> Iterator[Tuple[int, ...]]:
    """Permutations of 1..n with ranks in [start, stop), in lexicographic order"""
    if start >= stop:
        return
    values = unrank(n, start)
    yield tuple(values)
    for _ in range(stop - start - 1):
        next_permutation(values)
        yield tuple(values)


def iter_permutations(n: int) -> Iterator[Tuple[int, ...]]:
    return iter_rank_range(n, 0, factorial(n))
