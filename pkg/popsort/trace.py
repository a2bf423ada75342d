"""
Sort traces

Repeated Pop until the increasing permutation is reached.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from .errors import TraceLimitError
from .permutation import Permutation, pop_values


@dataclass(frozen=True)
class SortTrace:
    """sigma_0, sigma_1, ..., sigma_{t*} with steps[0] the input"""

    steps: Tuple[Permutation, ...]

    @property
    def t_star(self) -> int:
        return len(self.steps) - 1

    @property
    def n(self) -> int:
        return self.steps[0].n

    def __getitem__(self, t: int) -> Permutation:
        return self.steps[t]


def _is_sorted(values: Sequence[int]) -> bool:
    return all(values[i] < values[i + 1] for i in range(len(values) - 1))


def _limit_error(values: Sequence[int]) -> TraceLimitError:
    return TraceLimitError(
        f"permutation {','.join(map(str, values))} is still unsorted after "
        f"{len(values)} pop passes"
    )


def sort_trace(p: Permutation) -> SortTrace:
    """
    Iterate pop until the increasing permutation

    Raises:
        TraceLimitError: more than n passes would be needed
    """
    steps = [p]
    values = p.values
    while not _is_sorted(values):
        if len(steps) > p.n:
            raise _limit_error(p.values)
        values = pop_values(values)
        steps.append(Permutation(values))
    return SortTrace(tuple(steps))


def count_sorts(values: Sequence[int]) -> int:
    """t* of a raw value tuple without keeping the intermediate steps"""
    n = len(values)
    t = 0
    current = tuple(values)
    while not _is_sorted(current):
        if t == n:
            raise _limit_error(values)
        current = pop_values(current)
        t += 1
    return t


def t_star(p: Permutation) -> int:
    return count_sorts(p.values)
