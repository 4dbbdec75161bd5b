"""Exact interval sets on the extended real line.

Endpoints are :class:`fractions.Fraction` values or the sentinels ``-INF`` /
``INF``.  An infinite endpoint is always open.  Every :class:`IntervalSet`
is kept in normal form: intervals are non-empty, sorted, pairwise disjoint
and maximal (no two of them could be joined into one interval).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

INF = math.inf

Endpoint = Union[Fraction, float]


@dataclass(frozen=True)
class Interval:
    lo: Endpoint
    hi: Endpoint
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        # infinite ends can never be attained
        if self.lo == -INF and not self.lo_open:
            object.__setattr__(self, "lo_open", True)
        if self.hi == INF and not self.hi_open:
            object.__setattr__(self, "hi_open", True)
        if self.lo == INF or self.hi == -INF:
            raise ValueError("interval endpoints out of order")

    @classmethod
    def closed(cls, lo, hi):
        return cls(lo, hi, False, False)

    @classmethod
    def open(cls, lo, hi):
        return cls(lo, hi, True, True)

    @classmethod
    def point(cls, x):
        return cls(x, x, False, False)

    def is_empty(self) -> bool:
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and (self.lo_open or self.hi_open)

    def __contains__(self, x) -> bool:
        if x < self.lo or (x == self.lo and self.lo_open):
            return False
        if x > self.hi or (x == self.hi and self.hi_open):
            return False
        return True

    def is_bounded(self) -> bool:
        return self.lo != -INF and self.hi != INF

    def intersect(self, other: "Interval") -> "Interval":
        # the later lower end wins; at a tie an open end is the stricter one
        if (self.lo, self.lo_open) > (other.lo, other.lo_open):
            lo, lo_open = self.lo, self.lo_open
        else:
            lo, lo_open = other.lo, other.lo_open
        if (self.hi, not self.hi_open) < (other.hi, not other.hi_open):
            hi, hi_open = self.hi, self.hi_open
        else:
            hi, hi_open = other.hi, other.hi_open
        return Interval(lo, hi, lo_open, hi_open)

    def reflect(self, b) -> "Interval":
        """Mirror image about the point ``b``; openness follows the endpoints."""
        return Interval(2 * b - self.hi, 2 * b - self.lo, self.hi_open, self.lo_open)

    def __str__(self):
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        return f"{left}{_fmt(self.lo)}, {_fmt(self.hi)}{right}"


def _fmt(x) -> str:
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return str(x)


def _lo_key(iv: Interval):
    # closed lower ends sort before open ones at the same coordinate
    return (iv.lo, iv.lo_open)


def _touches(a: Interval, b: Interval) -> bool:
    """True if ``b`` (with ``b.lo >= a.lo``) overlaps or abuts ``a``."""
    if b.lo < a.hi:
        return True
    return b.lo == a.hi and not (a.hi_open and b.lo_open)


def _normalize(intervals: Iterable[Interval]) -> tuple[Interval, ...]:
    items = sorted((iv for iv in intervals if not iv.is_empty()), key=_lo_key)
    out: list[Interval] = []
    for iv in items:
        if out and _touches(out[-1], iv):
            cur = out[-1]
            if (iv.hi, not iv.hi_open) > (cur.hi, not cur.hi_open):
                out[-1] = Interval(cur.lo, iv.hi, cur.lo_open, iv.hi_open)
        else:
            out.append(iv)
    return tuple(out)


class IntervalSet:
    """Immutable finite union of intervals in normal form."""

    __slots__ = ("_intervals",)

    def __init__(self, intervals: Iterable[Interval] = ()):
        self._intervals = _normalize(intervals)

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls()

    @classmethod
    def real_line(cls) -> "IntervalSet":
        return cls([Interval(-INF, INF, True, True)])

    @classmethod
    def of(cls, lo, hi, lo_open=False, hi_open=False) -> "IntervalSet":
        return cls([Interval(lo, hi, lo_open, hi_open)])

    @property
    def intervals(self) -> tuple[Interval, ...]:
        return self._intervals

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._intervals)

    def __len__(self) -> int:
        """Number of maximal convex subsets."""
        return len(self._intervals)

    def __bool__(self) -> bool:
        return bool(self._intervals)

    def is_empty(self) -> bool:
        return not self._intervals

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._intervals == other._intervals

    def __hash__(self):
        return hash(self._intervals)

    def __contains__(self, x) -> bool:
        return any(x in iv for iv in self._intervals)

    def __repr__(self):
        if not self._intervals:
            return "IntervalSet(∅)"
        return "IntervalSet(" + " ∪ ".join(map(str, self._intervals)) + ")"

    def union(self, *others: "IntervalSet") -> "IntervalSet":
        items = list(self._intervals)
        for o in others:
            items.extend(o._intervals)
        return IntervalSet(items)

    __or__ = union

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        a, b = self._intervals, other._intervals
        i = j = 0
        while i < len(a) and j < len(b):
            piece = a[i].intersect(b[j])
            if not piece.is_empty():
                out.append(piece)
            # advance whichever interval ends first
            if (a[i].hi, not a[i].hi_open) < (b[j].hi, not b[j].hi_open):
                i += 1
            else:
                j += 1
        return IntervalSet(out)

    __and__ = intersection

    def complement(self) -> "IntervalSet":
        out = []
        lo, lo_open = -INF, True
        for iv in self._intervals:
            if iv.lo != -INF:
                out.append(Interval(lo, iv.lo, lo_open, not iv.lo_open))
            lo, lo_open = iv.hi, not iv.hi_open
        if lo != INF:
            out.append(Interval(lo, INF, lo_open, True))
        return IntervalSet(out)

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        return self.intersection(other.complement())

    __sub__ = difference

    def reflect(self, b) -> "IntervalSet":
        return IntervalSet(iv.reflect(b) for iv in self._intervals)

    def infimum(self):
        if not self._intervals:
            raise ValueError("infimum of an empty set")
        return self._intervals[0].lo

    def supremum(self):
        if not self._intervals:
            raise ValueError("supremum of an empty set")
        return self._intervals[-1].hi

    def clip(self, lo, hi) -> "IntervalSet":
        """Intersection with the closed interval ``[lo, hi]``."""
        return self.intersection(IntervalSet.of(lo, hi))

    def isdisjoint(self, other: "IntervalSet") -> bool:
        return self.intersection(other).is_empty()
