"""
Claim catalog

Each claim is a check over the full sort trace of one permutation that
returns the counterexamples it found there. The runner feeds it every
permutation of every length up to n_max.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, List, Tuple

from motion import (
    InteriorMode,
    MotionKind,
    MotionTable,
    classify_trace,
    is_interior,
    order_profile,
)
from popsort import (
    Permutation,
    SortTrace,
    decreasing_runs,
    pop,
    reverse_complement,
    sort_trace,
)
from popsort.errors import UnknownIdentifierError

from .bounds import BOUND_VARIANTS, all_bounds
from .report import Counterexample


WINDOWS: Dict[str, Tuple[Callable[[int], int], str]] = {
    'ceil-half': (lambda s: s // 2, "w(s) = ceil((s-1)/2)"),
    'floor-half-plus-one': (lambda s: s // 2 + 1, "w(s) = floor(s/2) + 1"),
    'within-i-minus-1': (lambda s: (s + 1) // 2, "w(s) = floor((s+1)/2)"),
    'first-i': (lambda s: (s + 3) // 2, "w(s) = floor((s+3)/2)"),
}
DEFAULT_WINDOW = 'ceil-half'


def window_size(window: str, s: int) -> int:
    if window not in WINDOWS:
        raise UnknownIdentifierError("window", window, WINDOWS)
    return WINDOWS[window][0](s)


@dataclass(frozen=True)
class ClaimOptions:
    mode: InteriorMode = InteriorMode.STRICT
    window: str = DEFAULT_WINDOW
    s_min: int = 2
    variant: str = 'stated'

    def __post_init__(self):
        if self.window not in WINDOWS:
            raise UnknownIdentifierError("window", self.window, WINDOWS)
        if self.variant not in BOUND_VARIANTS:
            raise UnknownIdentifierError("bound variant", self.variant, BOUND_VARIANTS)
        if self.s_min < 1:
            raise ValueError(f"s_min must be >= 1, got {self.s_min}")


class TraceContext:
    """Lazily computed views of one permutation's sort trace"""

    def __init__(self, permutation: Permutation):
        self.permutation = permutation
        self.trace: SortTrace = sort_trace(permutation)

    @property
    def n(self) -> int:
        return self.permutation.n

    @property
    def steps(self) -> Tuple[Permutation, ...]:
        return self.trace.steps

    @property
    def t_star(self) -> int:
        return self.trace.t_star

    @cached_property
    def tables(self) -> List[MotionTable]:
        return classify_trace(self.trace)

    def counterexample(self, t: int, position, value, detail: str) -> Counterexample:
        return Counterexample(self.n, self.permutation.values, t, position, value, detail)


def check_no_long_runs(ctx: TraceContext, options: ClaimOptions) -> List[Counterexample]:
    found = []
    for t in range(1, ctx.t_star + 1):
        sigma = ctx.steps[t]
        for start, length in decreasing_runs(sigma):
            if length >= 4:
                found.append(ctx.counterexample(
                    t, start, sigma.at(start),
                    f"decreasing run of length {length} at position {start} of sigma_{t}"
                ))
    return found


def check_pivot_center_origin(ctx: TraceContext, options: ClaimOptions) -> List[Counterexample]:
    found = []
    for t in range(2, ctx.t_star + 1):
        table = ctx.tables[t - 1]
        before = ctx.steps[t - 2]
        for value in table.values_of_kind(MotionKind.PIVOT_CENTER):
            earlier = before.position_of(value)
            if not is_interior(before, earlier, options.mode):
                found.append(ctx.counterexample(
                    t, table.source.position_of(value), value,
                    f"pivot center {value} was not {options.mode.value} interior "
                    f"in sigma_{t - 2} (position {earlier})"
                ))
    return found


_LEFT_MOVES = (MotionKind.SWITCH_LEFT, MotionKind.PIVOT_LEFT)
_RIGHT_MOVES = (MotionKind.SWITCH_RIGHT, MotionKind.PIVOT_RIGHT)


def check_motion_persistence(ctx: TraceContext, options: ClaimOptions) -> List[Counterexample]:
    found = []
    for t in range(2, ctx.t_star + 1):
        current = ctx.tables[t - 1]
        previous = ctx.tables[t - 2]
        before = ctx.steps[t - 2]
        for value, motion in current.items():
            if motion.kind in _LEFT_MOVES:
                direction = 'left'
            elif motion.kind in _RIGHT_MOVES:
                direction = 'right'
            else:
                continue

            prior = previous.motion_of(value)
            if prior.moves_left if direction == 'left' else prior.moves_right:
                continue
            if prior.kind.is_stationary and is_interior(
                before, before.position_of(value), options.mode
            ):
                continue
            found.append(ctx.counterexample(
                t, current.source.position_of(value), value,
                f"moved {direction} in sort {t} after {prior} in sort {t - 1}"
            ))
    return found


def check_pop_stop(ctx: TraceContext, options: ClaimOptions) -> List[Counterexample]:
    found = []
    for t in range(0, ctx.t_star + 1):
        sigma = ctx.steps[t]
        need = (t + 2) // 2  # ceil((t + 1) / 2)
        profile = None
        for i in range(1, sigma.n + 1):
            if not is_interior(sigma, i, options.mode):
                continue
            if profile is None:
                profile = order_profile(sigma)
            left_ok = profile.lr_max[i - 1] or profile.smaller_left[i - 1] >= need
            right_ok = profile.rl_min[i - 1] or profile.larger_right[i - 1] >= need
            if not left_ok:
                found.append(ctx.counterexample(
                    t, i, sigma.at(i),
                    f"not a left-to-right maximum and only {profile.smaller_left[i - 1]} "
                    f"smaller elements on its left (need {need})"
                ))
            if not right_ok:
                found.append(ctx.counterexample(
                    t, i, sigma.at(i),
                    f"not a right-to-left minimum and only {profile.larger_right[i - 1]} "
                    f"larger elements on its right (need {need})"
                ))
    return found


def _pivot_centers_after(ctx: TraceContext, options: ClaimOptions):
    """(s, w(s), table, value) for every pivot center of a sort s >= s_min"""
    for s in range(options.s_min, ctx.t_star + 1):
        table = ctx.tables[s - 1]
        w = window_size(options.window, s)
        for value in table.values_of_kind(MotionKind.PIVOT_CENTER):
            yield s, w, table, value


def check_pivot_window(ctx: TraceContext, options: ClaimOptions) -> List[Counterexample]:
    found = []
    n = ctx.n
    for s, w, table, value in _pivot_centers_after(ctx, options):
        position = table.source.position_of(value)
        if position <= w or position >= n + 1 - w:
            found.append(ctx.counterexample(
                s, position, value,
                f"pivot center at position {position} inside the window w({s}) = {w}"
            ))
    return found


def check_value_window(ctx: TraceContext, options: ClaimOptions) -> List[Counterexample]:
    found = []
    n = ctx.n
    for s, w, table, value in _pivot_centers_after(ctx, options):
        if value <= w or value >= n + 1 - w:
            found.append(ctx.counterexample(
                s, table.source.position_of(value), value,
                f"pivot center value {value} inside the value window w({s}) = {w}"
            ))
    return found


def check_sort_bound(ctx: TraceContext, options: ClaimOptions) -> List[Counterexample]:
    if ctx.permutation.is_identity():
        return []
    found = []
    for witness in all_bounds(ctx.permutation, options.variant):
        if ctx.t_star < witness.bound:
            found.append(ctx.counterexample(
                ctx.t_star, witness.k, ctx.n - witness.i + 1,
                f"t* = {ctx.t_star} is below the bound {witness.bound} "
                f"(i = {witness.i}, k = {witness.k})"
            ))
    return found


def check_pop_structure(ctx: TraceContext, options: ClaimOptions) -> List[Counterexample]:
    found = []
    p = ctx.permutation
    popped = pop(p)
    if (popped == p) != p.is_identity():
        found.append(ctx.counterexample(1, None, None, "pop fixes a permutation that is not sorted"))
    if pop(reverse_complement(p)) != reverse_complement(popped):
        found.append(ctx.counterexample(1, None, None, "pop does not commute with reverse-complement"))
    if ctx.t_star > ctx.n - 1:
        found.append(ctx.counterexample(ctx.t_star, None, None, f"t* = {ctx.t_star} exceeds n - 1"))
    return found


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    check: Callable[[TraceContext, ClaimOptions], List[Counterexample]]
    options_used: Tuple[str, ...] = ()


CLAIMS: Dict[str, Claim] = {
    claim.claim_id: claim for claim in (
        Claim('obs-2.1', "no decreasing run of length >= 4 in any sigma_t, t >= 1",
              check_no_long_runs),
        Claim('obs-3.1', "a pivot center of sort t was interior in sigma_{t-2}",
              check_pivot_center_origin, ('mode',)),
        Claim('obs-3.2', "an element moving left (right) in sort t moved the same way "
                         "or was interior during sort t-1",
              check_motion_persistence, ('mode',)),
        Claim('lemma-3.3', "an interior element of sigma_t is a left-to-right maximum or has "
                           ">= ceil((t+1)/2) smaller elements on its left, and the mirror",
              check_pop_stop, ('mode',)),
        Claim('pivot-window', "no pivot center within w(s) positions of either end after sort s_min",
              check_pivot_window, ('window', 's_min')),
        Claim('value-window', "no pivot center with value within w(s) of 1 or n after sort s_min",
              check_value_window, ('window', 's_min')),
        Claim('thm-3.4', "t* is at least every applicable lower bound read from sigma_1",
              check_sort_bound, ('variant',)),
        Claim('pop-structure', "pop fixes only the sorted permutation, commutes with "
                               "reverse-complement, and t* <= n - 1",
              check_pop_structure),
    )
}


def get_claim(claim_id: str) -> Claim:
    if claim_id not in CLAIMS:
        raise UnknownIdentifierError("claim", claim_id, CLAIMS)
    return CLAIMS[claim_id]
