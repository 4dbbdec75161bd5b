"""Candidates, proxies and Voronoi structure on the line, in exact arithmetic.

Candidate and proxy indices are 0-based throughout the package.
"""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Optional, Sequence

from .intervals import INF, Interval, IntervalSet


class InvalidInstance(ValueError):
    pass


class TieBreak(enum.Enum):
    """Global directionally consistent tie-breaking rules."""

    LEFT = "left"
    RIGHT = "right"


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, float):
        raise TypeError(f"floating point value {x!r} not accepted; use a Fraction")
    return Fraction(x)


@dataclass(frozen=True)
class Instance:
    candidates: tuple[Fraction, ...]
    theta: Fraction

    def __init__(self, candidates: Sequence, theta):
        cs = tuple(as_fraction(c) for c in candidates)
        th = as_fraction(theta)
        if len(cs) < 2:
            raise InvalidInstance("an instance needs at least two candidates")
        if any(b <= a for a, b in zip(cs, cs[1:])):
            raise InvalidInstance("candidate positions must be strictly increasing")
        if cs[0] != 0 or cs[-1] != 1:
            raise InvalidInstance("extreme candidates must sit at 0 and 1")
        if not 0 < th < 1:
            raise InvalidInstance("theta must lie strictly between 0 and 1")
        object.__setattr__(self, "candidates", cs)
        object.__setattr__(self, "theta", th)

    @property
    def m(self) -> int:
        return len(self.candidates)

    def close(self, i: int, j: int) -> bool:
        """Whether candidates ``i`` and ``j`` are theta-close."""
        return abs(self.candidates[i] - self.candidates[j]) <= self.theta

    def with_theta(self, theta) -> "Instance":
        return Instance(self.candidates, theta)

    @cached_property
    def bisectors(self) -> tuple[Fraction, ...]:
        cs = self.candidates
        return tuple((a + b) / 2 for a, b in zip(cs, cs[1:]))

    @cached_property
    def denominator_lcm(self) -> int:
        return lcm(*(c.denominator for c in self.candidates))

    def __repr__(self):
        cs = ", ".join(str(c) for c in self.candidates)
        return f"Instance([{cs}], theta={self.theta})"


@dataclass(frozen=True)
class Arrangement:
    proxies: tuple[Fraction, ...]

    def __init__(self, proxies: Sequence):
        ps = tuple(as_fraction(p) for p in proxies)
        if not ps:
            raise ValueError("an arrangement needs at least one proxy")
        if any(b <= a for a, b in zip(ps, ps[1:])):
            raise ValueError("proxy positions must be strictly increasing")
        object.__setattr__(self, "proxies", ps)

    @classmethod
    def from_points(cls, points) -> "Arrangement":
        """Sort and deduplicate an arbitrary collection of positions."""
        return cls(sorted(set(as_fraction(p) for p in points)))

    def __len__(self):
        return len(self.proxies)

    def __iter__(self):
        return iter(self.proxies)

    @property
    def bisectors(self) -> tuple[Fraction, ...]:
        ps = self.proxies
        return tuple((a + b) / 2 for a, b in zip(ps, ps[1:]))

    def __repr__(self):
        return "Arrangement([" + ", ".join(str(p) for p in self.proxies) + "])"


def nearest_index(x, points: Sequence[Fraction], tb: TieBreak = TieBreak.LEFT) -> int:
    """Index of the point nearest to ``x`` in a sorted sequence, ties per ``tb``."""
    mids = [(a + b) / 2 for a, b in zip(points, points[1:])]
    return _cell_index(x, mids, tb)


def _cell_index(x, mids, tb: TieBreak) -> int:
    # a tie sits exactly on a midpoint; LEFT keeps it in the left cell
    if tb is TieBreak.LEFT:
        return bisect_left(mids, x)
    return bisect_right(mids, x)


def top_of(x, inst: Instance, tb: TieBreak = TieBreak.LEFT) -> int:
    """Favorite candidate (index) of a point anywhere on the real line."""
    return _cell_index(x, inst.bisectors, tb)


def candidate_bisectors(inst: Instance) -> list[Fraction]:
    return list(inst.bisectors)


def _cells(mids, lo, hi, tb: TieBreak) -> list[IntervalSet]:
    bounds = [lo, *mids, hi]
    cells = []
    for k in range(len(bounds) - 1):
        a, b = bounds[k], bounds[k + 1]
        if tb is TieBreak.LEFT:
            lo_open, hi_open = k > 0, False
        else:
            lo_open, hi_open = False, k < len(bounds) - 2
        cells.append(IntervalSet([Interval(a, b, lo_open, hi_open)]))
    return cells


def voronoi_partition(inst: Instance, tb: TieBreak = TieBreak.LEFT,
                      extended: bool = False) -> list[IntervalSet]:
    """Voronoi cell of every candidate, over [0, 1] or over the whole line."""
    lo, hi = (-INF, INF) if extended else (Fraction(0), Fraction(1))
    return _cells(inst.bisectors, lo, hi, tb)


def infeasible_regions(inst: Instance, i: int,
                       tb: TieBreak = TieBreak.LEFT) -> tuple[IntervalSet, IntervalSet]:
    """Extended cells of candidates theta-far from ``i`` on the left and on the right."""
    cells = voronoi_partition(inst, tb, extended=True)
    ci, th = inst.candidates[i], inst.theta
    left = IntervalSet().union(*(cells[l] for l, c in enumerate(inst.candidates) if c < ci - th))
    right = IntervalSet().union(*(cells[l] for l, c in enumerate(inst.candidates) if c > ci + th))
    return left, right


def mirror(x, b):
    """Reflection of ``x`` about ``b``."""
    return 2 * b - x


def theta_bisector_right(inst: Instance, h: int) -> Optional[Fraction]:
    """Bisector between the furthest theta-close and closest theta-far candidate right of ``h``.

    ``None`` when every candidate to the right is theta-close.
    """
    cs = inst.candidates
    last = bisect_right(cs, cs[h] + inst.theta) - 1
    if last == len(cs) - 1:
        return None
    return (cs[last] + cs[last + 1]) / 2


def theta_bisector_left(inst: Instance, h: int) -> Optional[Fraction]:
    cs = inst.candidates
    first = bisect_left(cs, cs[h] - inst.theta)
    if first == 0:
        return None
    return (cs[first - 1] + cs[first]) / 2


def theta_close_set(inst: Instance, i: int) -> list[int]:
    return [l for l in range(inst.m) if inst.close(i, l)]


def segment(inst: Instance, i: int, tb: TieBreak = TieBreak.LEFT) -> IntervalSet:
    """Union of the [0, 1] Voronoi cells of candidates theta-close to ``i``."""
    cells = voronoi_partition(inst, tb)
    return IntervalSet().union(*(cells[l] for l in theta_close_set(inst, i)))
