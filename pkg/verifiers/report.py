"""
Claim reports
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple


@dataclass(frozen=True)
class Counterexample:
    """One place where a claim failed"""

    n: int
    permutation: Tuple[int, ...]
    t: int
    position: Optional[int]
    value: Optional[int]
    detail: str

    def sort_key(self):
        return (
            self.n,
            self.permutation,
            self.t,
            self.position if self.position is not None else 0,
            self.value if self.value is not None else 0,
            self.detail,
        )


@dataclass(frozen=True)
class ClaimReport:
    """
    Outcome of one verifier run

    counterexamples are held in canonical (n, permutation, t, position) order,
    so reports do not depend on how the scan was scheduled.
    """

    claim_id: str
    parameters: Dict[str, Any]
    checked_count: int
    counterexamples: Tuple[Counterexample, ...]
    elapsed_seconds: float = field(default=0.0, compare=False)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def contains(self, permutation: Tuple[int, ...], t: int, value: int) -> bool:
        return any(
            c.permutation == tuple(permutation) and c.t == t and c.value == value
            for c in self.counterexamples
        )
