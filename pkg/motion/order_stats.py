"""
Left-to-right maxima, right-to-left minima and the related counts

Single queries are O(n); order_profile answers all positions at once in
O(n log n) with a Fenwick tree.
"""

from dataclasses import dataclass
from typing import List, Tuple

from popsort import Permutation


def _check_position(p: Permutation, i: int):
    if i < 1 or i > p.n:
        raise ValueError(f"position {i} out of range 1..{p.n}")


def is_lr_max(p: Permutation, i: int) -> bool:
    _check_position(p, i)
    value = p.values[i - 1]
    return all(earlier < value for earlier in p.values[:i - 1])


def is_rl_min(p: Permutation, i: int) -> bool:
    _check_position(p, i)
    value = p.values[i - 1]
    return all(later > value for later in p.values[i:])


def smaller_left_count(p: Permutation, i: int) -> int:
    _check_position(p, i)
    value = p.values[i - 1]
    return sum(1 for earlier in p.values[:i - 1] if earlier < value)


def larger_right_count(p: Permutation, i: int) -> int:
    _check_position(p, i)
    value = p.values[i - 1]
    return sum(1 for later in p.values[i:] if later > value)


class _Fenwick:
    def __init__(self, size: int):
        self.tree = [0] * (size + 1)

    def add(self, index: int):
        while index < len(self.tree):
            self.tree[index] += 1
            index += index & -index

    def prefix(self, index: int) -> int:
        total = 0
        while index > 0:
            total += self.tree[index]
            index -= index & -index
        return total


@dataclass(frozen=True)
class OrderProfile:
    """Per-position (0-indexed tuples) order statistics of one permutation"""

    lr_max: Tuple[bool, ...]
    rl_min: Tuple[bool, ...]
    smaller_left: Tuple[int, ...]
    larger_right: Tuple[int, ...]


def order_profile(p: Permutation) -> OrderProfile:
    n = p.n
    values = p.values

    smaller_left: List[int] = []
    tree = _Fenwick(n)
    for value in values:
        smaller_left.append(tree.prefix(value - 1))
        tree.add(value)

    larger_right = [0] * n
    tree = _Fenwick(n)
    for index in range(n - 1, -1, -1):
        value = values[index]
        larger_right[index] = (n - index - 1) - tree.prefix(value)
        tree.add(value)

    # lr-max iff every earlier value is smaller
    lr_max = tuple(smaller_left[index] == index for index in range(n))
    rl_min = tuple(larger_right[index] == n - index - 1 for index in range(n))
    return OrderProfile(lr_max, rl_min, tuple(smaller_left), tuple(larger_right))
