"""
Permutation core

Permutations in one-line notation, their maximal decreasing runs, and the
Pop pass that reverses every run. Positions are 1-indexed throughout.
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Tuple

from .errors import InvalidPermutationError


@dataclass(frozen=True)
class Permutation:
    """Immutable permutation of {1..n} in one-line notation"""

    values: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return format_permutation(self)

    def at(self, i: int) -> int:
        """Value at 1-indexed position i, i.e. sigma(i)"""
        return self.values[i - 1]

    @cached_property
    def inverse(self) -> Tuple[int, ...]:
        """inverse[v - 1] is the 1-indexed position of value v"""
        positions = [0] * len(self.values)
        for index, value in enumerate(self.values):
            positions[value - 1] = index + 1
        return tuple(positions)

    def position_of(self, value: int) -> int:
        """sigma^{-1}(value)"""
        return self.inverse[value - 1]

    def is_identity(self) -> bool:
        return all(value == index + 1 for index, value in enumerate(self.values))


@dataclass(frozen=True)
class RunDecomposition:
    """Maximal decreasing runs as (start position, length) segments"""

    runs: Tuple[Tuple[int, int], ...]

    @property
    def max_length(self) -> int:
        return max(length for _, length in self.runs)

    def __iter__(self):
        return iter(self.runs)

    def __len__(self) -> int:
        return len(self.runs)


def from_values(values: Iterable[int]) -> Permutation:
    """
    Build a validated permutation

    Args:
        values: Sequence that must be a bijection on {1..n}

    Returns:
        Permutation

    Raises:
        InvalidPermutationError: empty, duplicate, non-integer or out-of-range value
    """
    values = tuple(values)
    n = len(values)
    if n == 0:
        raise InvalidPermutationError("a permutation needs at least one value")

    seen = [False] * (n + 1)
    for value in values:
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidPermutationError(f"value {value!r} is not an integer", value)
        if value < 1 or value > n:
            raise InvalidPermutationError(
                f"value {value} is out of range 1..{n}", value
            )
        if seen[value]:
            raise InvalidPermutationError(f"duplicate value {value}", value)
        seen[value] = True

    return Permutation(values)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


_SEPARATORS = re.compile(r"[,\s]+")


def parse_permutation(text: str) -> Permutation:
    """
    Parse the text form of a permutation

    Accepts comma- or whitespace-separated integers ("4,7,1,8,3,6,9,5,2") and,
    for n <= 9 only, the compact digit string ("471836952").
    """
    text = (text or "").strip()
    if not text:
        raise InvalidPermutationError("empty permutation text")

    if _SEPARATORS.search(text):
        tokens = [token for token in _SEPARATORS.split(text) if token]
    elif text.isdigit() and len(text) > 1:
        if len(text) > 9:
            raise InvalidPermutationError(
                "the compact digit form is only accepted for n <= 9; "
                "separate values with commas"
            )
        tokens = list(text)
    else:
        tokens = [text]

    values = []
    for token in tokens:
        try:
            values.append(int(token))
        except ValueError:
            raise InvalidPermutationError(f"'{token}' is not an integer", token)

    return from_values(values)


def format_permutation(p: Permutation) -> str:
    """Comma form used for every serialized permutation"""
    return ",".join(str(value) for value in p.values)


def decreasing_runs(p: Permutation) -> RunDecomposition:
    """Unique maximal decreasing-run decomposition, singletons included"""
    values = p.values
    runs = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] > values[i - 1]:
            runs.append((start + 1, i - start))
            start = i
    return RunDecomposition(tuple(runs))


def pop_values(values: Sequence[int]) -> Tuple[int, ...]:
    """Pop on a raw value tuple (no validation)"""
    out = []
    start = 0
    n = len(values)
    for i in range(1, n + 1):
        if i == n or values[i] > values[i - 1]:
            out.extend(reversed(values[start:i]))
            start = i
    return tuple(out)


def pop(p: Permutation) -> Permutation:
    """Reverse every maximal decreasing run in place"""
    return Permutation(pop_values(p.values))


def reverse_complement(p: Permutation) -> Permutation:
    """p'(i) = n + 1 - p(n + 1 - i); commutes with pop"""
    n = p.n
    return Permutation(tuple(n + 1 - value for value in reversed(p.values)))
