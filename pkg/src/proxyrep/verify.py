"""Deciding whether a proxy arrangement is theta-representative."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from .geometry import (Arrangement, Instance, TieBreak, _cells, as_fraction, infeasible_regions,
                       top_of)
from .intervals import IntervalSet


@dataclass(frozen=True)
class Violation:
    """A voter whose nearest proxy favors a theta-far candidate."""

    voter: Fraction
    voter_top: int
    proxy: Fraction
    proxy_top: int

    def describe(self, inst: Instance) -> str:
        cs = inst.candidates
        return (f"voter {self.voter} prefers {cs[self.voter_top]} but its proxy "
                f"{self.proxy} votes for {cs[self.proxy_top]}")


def proxy_voronoi_cells(arr: Arrangement, tb: TieBreak = TieBreak.LEFT) -> list[IntervalSet]:
    """Cells of the proxies restricted to voters in [0, 1]; some may be empty."""
    cells = _cells(arr.bisectors, -float("inf"), float("inf"), tb)
    return [c.clip(Fraction(0), Fraction(1)) for c in cells]


def _witness(region: IntervalSet) -> Fraction:
    first = region.intervals[0]
    return (first.lo + first.hi) / 2


def verify_arrangement(inst: Instance, arr: Arrangement,
                       tb: TieBreak = TieBreak.LEFT) -> Optional[Violation]:
    """Return ``None`` if ``arr`` is theta-representative, else a violating voter.

    Each proxy's cell must avoid the extended cells of all candidates that are
    theta-far from the proxy's own favorite.
    """
    if len(arr) == 0:
        raise ValueError("empty arrangement")
    for p, cell in zip(arr.proxies, proxy_voronoi_cells(arr, tb)):
        if cell.is_empty():
            continue
        i = top_of(p, inst, tb)
        left, right = infeasible_regions(inst, i, tb)
        bad = cell & (left | right)
        if bad:
            v = _witness(bad)
            return Violation(v, top_of(v, inst, tb), p, i)
    return None


def is_representative(inst: Instance, arr: Arrangement, tb: TieBreak = TieBreak.LEFT) -> bool:
    return verify_arrangement(inst, arr, tb) is None


def check_bisector_coincidence(inst: Instance, arr: Arrangement) -> list[tuple[int, int]]:
    """Adjacent theta-far candidate pairs whose bisector matches no proxy bisector.

    Any such pair rules out theta-representation.
    """
    proxy_mids = set(arr.bisectors)
    out = []
    for i, b in enumerate(inst.bisectors):
        if not inst.close(i, i + 1) and b not in proxy_mids:
            out.append((i, i + 1))
    return out


def _argmin(x, points, tb: TieBreak) -> int:
    # linear scan on purpose: this path must not share code with the exact verifier
    best = None
    for k, p in enumerate(points):
        d = abs(x - p)
        if best is None or d < best[0] or (d == best[0] and tb is TieBreak.RIGHT):
            best = (d, k)
    return best[1]


def grid_oracle_verify(inst: Instance, arr: Arrangement, tb: TieBreak = TieBreak.LEFT,
                       resolution: int = 100) -> Optional[Violation]:
    """Check representation pointwise on a grid plus nudged bisector points.

    A reported violation is genuine; ``None`` only means no grid point failed.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    dens = [c.denominator for c in inst.candidates] + [p.denominator for p in arr.proxies]
    nudge = Fraction(1, 2 * resolution * lcm(*dens))
    points = {Fraction(l, resolution) for l in range(resolution + 1)}
    for b in (*inst.bisectors, *arr.bisectors):
        points.update((b - nudge, b, b + nudge))
    for v in sorted(points):
        if not 0 <= v <= 1:
            continue
        vt = _argmin(v, inst.candidates, tb)
        j = _argmin(v, arr.proxies, tb)
        pt = _argmin(arr.proxies[j], inst.candidates, tb)
        if not inst.close(vt, pt):
            return Violation(v, vt, arr.proxies[j], pt)
    return None


def evenly_spaced(k: int) -> Arrangement:
    """``k >= 2`` proxies at ``l / (k - 1)``."""
    if k < 2:
        raise ValueError("need at least two proxies")
    return Arrangement(Fraction(l, k - 1) for l in range(k))


def evenly_spaced_counterexample(theta, k: int) -> Instance:
    """Three candidates ``{0, x, 1}`` on which :func:`evenly_spaced` ``(k)`` fails.

    ``x`` sits just past ``theta``, inside the same gap of the proxy grid, so
    ``c_1`` and ``c_2`` are theta-far while their bisector ``x/2`` misses every
    proxy bisector.
    """
    th = as_fraction(theta)
    if not 0 < th < 1:
        raise ValueError("theta must lie strictly between 0 and 1")
    grid = evenly_spaced(k).proxies
    upper = min(g for g in grid if g > th)
    eps = (upper - th) / 2
    proxy_mids = set(evenly_spaced(k).bisectors)
    for frac in (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)):
        x = th + frac * eps
        if x / 2 not in proxy_mids:
            return Instance([0, x, 1], th)
    raise AssertionError("unreachable: at most one choice can hit a proxy bisector")
