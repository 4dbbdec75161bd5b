"""Proxies anywhere on the line: optimum, expand-and-merge bound, lower bounds, dual."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Optional

from .geometry import (Arrangement, Instance, InvalidInstance, TieBreak, as_fraction,
                       theta_bisector_left, theta_bisector_right, voronoi_partition)
from .intervals import INF, Interval, IntervalSet
from .restricted import Solution, reference_sweep


@dataclass(frozen=True)
class FeasibilityState:
    """Feasible positions of one proxy, split by the proxy's favorite candidate.

    ``by_candidate[i]`` is the part of the set lying in the extended cell of ``c_i``.
    """

    index: int
    by_candidate: tuple[IntervalSet, ...]

    @property
    def union(self) -> IntervalSet:
        return IntervalSet().union(*self.by_candidate)

    @property
    def n_subsets(self) -> int:
        """Sum over candidates of the number of maximal convex pieces."""
        return sum(len(s) for s in self.by_candidate)


def _bounds(inst: Instance):
    lower = [theta_bisector_left(inst, i) for i in range(inst.m)]
    upper = [theta_bisector_right(inst, i) for i in range(inst.m)]
    lower = [-INF if b is None else b for b in lower]
    upper = [INF if b is None else b for b in upper]
    return lower, upper


def init_feasibility(inst: Instance, tb: TieBreak = TieBreak.LEFT) -> FeasibilityState:
    """Positions of the leftmost proxy that serve the voter at 0."""
    cells = voronoi_partition(inst, tb, extended=True)
    parts = tuple(cells[i] if inst.close(0, i) else IntervalSet() for i in range(inst.m))
    return FeasibilityState(1, parts)


def _successor_range(piece: Interval, lower_i, upper_h) -> Interval:
    # next proxy x is compatible with some y in piece iff the midpoint of x and y
    # stays within [lower_i, upper_h]; sweeping y over the piece gives one interval
    return Interval(2 * lower_i - piece.hi, 2 * upper_h - piece.lo,
                    piece.hi_open, piece.lo_open)


def propagate_feasibility(inst: Instance, prev: FeasibilityState,
                          tb: TieBreak = TieBreak.LEFT) -> FeasibilityState:
    """Feasible positions of the next proxy, given those of the previous one."""
    cells = voronoi_partition(inst, tb, extended=True)
    lower, upper = _bounds(inst)
    parts = []
    for i in range(inst.m):
        pieces = []
        for h in range(i + 1):
            src = prev.by_candidate[h]
            if src.is_empty():
                continue
            if h == i:
                alpha = src.infimum()
                pieces.append(Interval(alpha, INF, True, True))
            elif upper[h] >= lower[i]:
                pieces.extend(_successor_range(s, lower[i], upper[h]) for s in src)
        parts.append(IntervalSet(pieces) & cells[i])
    return FeasibilityState(prev.index + 1, tuple(parts))


def final_region(inst: Instance, tb: TieBreak = TieBreak.LEFT) -> IntervalSet:
    """Positions of the rightmost proxy that serve the voter at 1."""
    cells = voronoi_partition(inst, tb, extended=True)
    last = inst.m - 1
    return IntervalSet().union(*(cells[i] for i in range(inst.m) if inst.close(i, last)))


def _pick(region: IntervalSet, step: Fraction) -> Fraction:
    """Canonical rational point of a non-empty set: midpoint of its first piece."""
    iv = region.intervals[0]
    if iv.is_bounded():
        return (iv.lo + iv.hi) / 2
    if iv.hi != INF:
        return iv.hi - step
    if iv.lo != -INF:
        return iv.lo + step
    return Fraction(0)


def _predecessor(inst: Instance, state: FeasibilityState, x: Fraction, i: int,
                 step: Fraction) -> tuple[Fraction, int]:
    lower, upper = _bounds(inst)
    below_x = IntervalSet([Interval(-INF, x, True, True)])
    for h in range(i + 1):
        src = state.by_candidate[h]
        if src.is_empty() or upper[h] < lower[i]:
            continue
        window = IntervalSet.of(2 * lower[i] - x, 2 * upper[h] - x)
        region = src & window & below_x
        if region:
            return _pick(region, step), h
    raise AssertionError(f"no feasible predecessor for {x}")


def solve_unrestricted_optimal(inst: Instance, tb: TieBreak = TieBreak.LEFT,
                               record: Optional[list] = None) -> Solution:
    """Fewest proxies anywhere on the line forming a theta-representative arrangement.

    Grows feasibility sets one proxy at a time until the latest one reaches the
    positions that serve the voter at 1, then walks back choosing compatible
    predecessors.  Every computed :class:`FeasibilityState` is appended to
    ``record`` when given.
    """
    step = Fraction(1, 4 * inst.denominator_lcm)
    goal = final_region(inst, tb)
    states = [init_feasibility(inst, tb)]
    while True:
        if record is not None:
            record.append(states[-1])
        hit = states[-1].union & goal
        if hit:
            break
        if len(states) >= inst.m:
            raise AssertionError("proxies on every candidate must be feasible")
        states.append(propagate_feasibility(inst, states[-1], tb))

    cells = voronoi_partition(inst, tb, extended=True)
    x = _pick(hit, step)
    i = next(c for c in range(inst.m) if x in cells[c])
    positions = [x]
    for state in reversed(states[:-1]):
        x, i = _predecessor(inst, state, x, i, step)
        positions.append(x)
    return Solution(len(states), Arrangement(reversed(positions)))


def unrestricted_upper_bound_size(theta) -> Fraction:
    """``(3/2) ceil(1/theta)``."""
    return Fraction(3, 2) * ceil(1 / as_fraction(theta))


@dataclass
class ExpandMergeState:
    """Proxy pairs straddling the sweep bisectors during expand-and-merge.

    ``left[j]`` and ``right[j]`` stay symmetric about ``bisectors[j]``.
    """

    bisectors: list[Fraction]
    eps: Fraction
    left: list[Fraction] = field(default_factory=list)
    right: list[Fraction] = field(default_factory=list)
    frozen: list[bool] = field(default_factory=list)
    collided: list[bool] = field(default_factory=list)
    steps: list[Fraction] = field(default_factory=list)

    @property
    def widths(self) -> list[Fraction]:
        b = self.bisectors
        return [b[j + 1] - b[j] for j in range(len(b) - 1)]

    def gap(self, j: int) -> Fraction:
        return self.left[j + 1] - self.right[j]

    def proxies(self) -> Arrangement:
        return Arrangement.from_points(self.left + self.right)


def expand_and_merge(inst: Instance, trace: Optional[list] = None) -> ExpandMergeState:
    """Run the two phases of the expand-and-merge construction.

    Pairs start ``eps`` (a third of the smallest candidate gap) either side of
    their bisector and move outward at equal speed.  Whenever the two proxies
    inside an interval meet they merge, and both bisectors bounding that
    interval stop moving.  A snapshot of the state after each collision event
    is appended to ``trace`` when given.
    """
    bis = [s.bisector for s in reference_sweep(inst)]
    cs = inst.candidates
    eps = min(b - a for a, b in zip(cs, cs[1:])) / 3
    t = len(bis)
    st = ExpandMergeState(bis, eps, [b - eps for b in bis], [b + eps for b in bis],
                          [False] * t, [False] * (t - 1))
    while True:
        # time until each open interval closes, given how many of its sides still move
        events = []
        for j in range(t - 1):
            if st.collided[j]:
                continue
            movers = (not st.frozen[j]) + (not st.frozen[j + 1])
            if movers:
                events.append(st.gap(j) / movers)
        if not events:
            break
        delta = min(events)
        for j in range(t):
            if not st.frozen[j]:
                st.left[j] -= delta
                st.right[j] += delta
        st.steps.append(delta)
        hits = [j for j in range(t - 1) if not st.collided[j] and st.gap(j) == 0]
        for j in hits:
            st.collided[j] = True
            st.frozen[j] = st.frozen[j + 1] = True
        if trace is not None:
            trace.append(ExpandMergeState(list(bis), eps, list(st.left), list(st.right),
                                          list(st.frozen), list(st.collided), list(st.steps)))
    return st


def upper_bound_unrestricted(inst: Instance) -> Arrangement:
    """Expand-and-merge arrangement with at most ``(3/2) ceil(1/theta)`` proxies."""
    return expand_and_merge(inst).proxies()


def gen_lower_unrestricted(theta) -> Instance:
    """Evenly spaced candidates that force ``ceil(1/theta)`` proxies."""
    th = as_fraction(theta)
    if not 0 < th < 1:
        raise InvalidInstance("theta must lie strictly between 0 and 1")
    inv = 1 / th
    if inv.denominator == 1:
        spacing = Fraction(1, int(inv) - 1)
    else:
        spacing = Fraction(1, floor(inv))
    n = int(1 / spacing)
    return Instance([k * spacing for k in range(n + 1)], th)


def dual_theta_for_k(inst: Instance, k: int) -> tuple[Fraction, Arrangement]:
    """Threshold reachable with a budget of ``k`` proxies, and an arrangement achieving it."""
    if k < 3:
        raise ValueError("budget must be at least 3 proxies")
    theta = Fraction(1, (2 * k) // 3)
    return theta, upper_bound_unrestricted(inst.with_theta(theta))


def approx_lower_bound(inst: Instance) -> int:
    """``ceil(t/2)`` for ``t`` sweep bisectors; alternate reference segments are disjoint."""
    t = len(reference_sweep(inst))
    return (t + 1) // 2
