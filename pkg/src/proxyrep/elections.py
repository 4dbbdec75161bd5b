"""Median-voter (strict-Condorcet) outcomes under direct and proxy voting."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import Arrangement, Instance, TieBreak, as_fraction, nearest_index, top_of


class Side(enum.Enum):
    """Which weak Condorcet winner is chosen when the two medians disagree."""

    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"


@dataclass(frozen=True)
class Profile:
    voters: tuple[Fraction, ...]

    def __init__(self, voters: Sequence):
        vs = tuple(as_fraction(v) for v in voters)
        if not vs:
            raise ValueError("a profile needs at least one voter")
        if any(not 0 <= v <= 1 for v in vs):
            raise ValueError("voter positions must lie in [0, 1]")
        object.__setattr__(self, "voters", vs)

    @property
    def n(self) -> int:
        return len(self.voters)


def _median(positions: Sequence[Fraction], side: Side) -> Fraction:
    xs = sorted(positions)
    n = len(xs)
    if n % 2:
        return xs[n // 2]
    return xs[n // 2 - 1] if side is Side.LEFTMOST else xs[n // 2]


def _positions(profile) -> tuple[Fraction, ...]:
    return profile.voters if isinstance(profile, Profile) else tuple(profile)


def median_condorcet_winner(profile, inst: Instance, tb: TieBreak = TieBreak.LEFT,
                            side: Side = Side.LEFTMOST) -> int:
    """Winner (candidate index) of a strict-Condorcet rule on the line.

    ``profile`` may also be a plain sequence of positions, e.g. a proxy profile
    whose entries fall outside [0, 1].
    """
    pos = _positions(profile)
    if not pos:
        raise ValueError("empty profile")
    return top_of(_median(pos, side), inst, tb)


def proxy_profile(profile, arr: Arrangement, tb: TieBreak = TieBreak.LEFT) -> tuple[Fraction, ...]:
    """Each voter replaced by the position of its nearest proxy, in voter order."""
    return tuple(arr.proxies[nearest_index(v, arr.proxies, tb)] for v in _positions(profile))


def outcome_distance(profile, inst: Instance, arr: Arrangement, tb: TieBreak = TieBreak.LEFT,
                     side: Side = Side.LEFTMOST) -> Fraction:
    """Distance between the direct winner and the winner when proxies vote."""
    cs = inst.candidates
    direct = median_condorcet_winner(profile, inst, tb, side)
    delegated = median_condorcet_winner(proxy_profile(profile, arr, tb), inst, tb, side)
    return abs(cs[direct] - cs[delegated])
