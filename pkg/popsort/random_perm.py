"""
Seeded uniform permutations

The generator is numpy's PCG64 (a fixed, documented 64-bit algorithm). A
sample's sub-seed is SeedSequence(entropy=seed, spawn_key=(index,)), which is
exactly the index-th child of SeedSequence(seed).spawn(), so sample streams do
not depend on how samples are split across workers.
"""

from typing import List

import numpy as np

from .permutation import Permutation

SEED_MASK = (1 << 64) - 1


def sample_generator(seed: int, index: int) -> np.random.Generator:
    """Independent PCG64 stream for sample `index` under master `seed`"""
    sequence = np.random.SeedSequence(entropy=seed & SEED_MASK, spawn_key=(index,))
    return np.random.Generator(np.random.PCG64(sequence))


def fisher_yates(n: int, rng: np.random.Generator) -> List[int]:
    """
    Shuffle 1..n with the Fisher-Yates algorithm

    For i = n-1 down to 1 (0-indexed) swap slot i with a uniform slot j in [0, i].
    The n-1 draws are taken in one call, in that order.
    """
    values = list(range(1, n + 1))
    if n < 2:
        return values
    draws = rng.integers(0, np.arange(n, 1, -1)).tolist()
    for i, j in zip(range(n - 1, 0, -1), draws):
        values[i], values[j] = values[j], values[i]
    return values


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    """Uniform permutation of length n; deterministic given the generator state"""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Permutation(tuple(fisher_yates(n, rng)))


def random_array(n: int, rng: np.random.Generator) -> np.ndarray:
    """Same draw as random_permutation, as an int64 array for the numpy engine"""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return np.asarray(fisher_yates(n, rng), dtype=np.int64)
