"""Proxies restricted to candidate positions: optimum, upper bound, lower-bound family."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import NamedTuple

from .geometry import Arrangement, Instance, InvalidInstance, TieBreak, as_fraction, top_of
from .verify import verify_arrangement


class Solution(NamedTuple):
    count: int
    arrangement: Arrangement


@dataclass
class DPTable:
    """``table[j][k]`` is 1 when the first ``j + 1`` candidates admit a valid
    arrangement of exactly ``k`` proxies whose rightmost proxy sits on ``c_j``.

    ``witness[(j, k)]`` holds the smallest ``i < j`` used to reach that entry.
    """

    m: int
    table: list[list[int]] = field(default_factory=list)
    witness: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.table:
            self.table = [[0] * (self.m + 1) for _ in range(self.m)]

    def __getitem__(self, jk):
        j, k = jk
        return self.table[j][k]


def restricted_upper_bound_size(theta) -> int:
    """``2(1/theta - 1)`` when ``1/theta`` is an integer, else ``2 floor(1/theta)``."""
    inv = 1 / as_fraction(theta)
    if inv.denominator == 1:
        return 2 * (int(inv) - 1)
    return 2 * floor(inv)


def _pair_ok(inst: Instance, i: int, j: int, eps: Fraction, tb: TieBreak) -> bool:
    """Whether voters in [c_i, c_j] are served well by adjacent proxies on c_i and c_j."""
    cs = inst.candidates
    b = (cs[i] + cs[j]) / 2
    for l, cb in enumerate(inst.bisectors):
        if cb == b:
            return inst.close(l, i) and inst.close(l + 1, j)
    # the proxy bisector lies inside a single candidate cell
    for v, proxy in ((b - eps, i), (b + eps, j)):
        if not inst.close(top_of(v, inst, tb), proxy):
            return False
    return True


def build_dp_table(inst: Instance, tb: TieBreak = TieBreak.LEFT) -> DPTable:
    m = inst.m
    dp = DPTable(m)
    mids = sorted({(a + b) / 2 for a, b in itertools.combinations(inst.candidates, 2)})
    # with two candidates the only proxy bisector is a candidate bisector
    eps = min(b - a for a, b in zip(mids, mids[1:])) / 3 if len(mids) > 1 else None
    for j in range(m):
        if inst.close(0, j):
            # a lone proxy on c_j serves every voter in [0, c_j]
            dp.table[j][1] = 1
    ok = {}
    for k in range(2, m + 1):
        for j in range(k - 1, m):
            for i in range(k - 2, j):
                if not dp.table[i][k - 1]:
                    continue
                if (i, j) not in ok:
                    ok[i, j] = _pair_ok(inst, i, j, eps, tb)
                if ok[i, j]:
                    dp.table[j][k] = 1
                    dp.witness[j, k] = i
                    break
    for j in range(m):
        assert dp.table[j][j + 1], "proxies on every candidate must be feasible"
    return dp


def solve_restricted_optimal(inst: Instance, tb: TieBreak = TieBreak.LEFT) -> Solution:
    """Fewest proxies on candidate positions forming a theta-representative arrangement."""
    dp = build_dp_table(inst, tb)
    last = [j for j in range(inst.m) if inst.close(j, inst.m - 1)]
    for k in range(1, inst.m + 1):
        ends = [j for j in last if dp[j, k]]
        if ends:
            break
    j = ends[0]
    picks = [j]
    kk = k
    while kk > 1:
        j = dp.witness[j, kk]
        kk -= 1
        picks.append(j)
    return Solution(k, Arrangement(inst.candidates[p] for p in reversed(picks)))


class SweepStep(NamedTuple):
    reference: int
    left: int
    right: int
    bisector: Fraction


def reference_sweep(inst: Instance) -> list[SweepStep]:
    """Greedy left-to-right sweep of reference candidates.

    From reference ``c``, the furthest candidate at or below ``c + theta`` and
    the nearest one beyond it define the next proxy bisector; the latter becomes
    the new reference.
    """
    cs, th = inst.candidates, inst.theta
    steps = []
    r = 0
    while cs[r] + th < 1:
        reach = cs[r] + th
        left = max(l for l in range(inst.m) if cs[l] <= reach)
        right = left + 1
        steps.append(SweepStep(r, left, right, (cs[left] + cs[right]) / 2))
        r = right
    return steps


def upper_bound_restricted(inst: Instance) -> Arrangement:
    """Proxies on both candidates flanking every sweep bisector."""
    steps = reference_sweep(inst)
    picks = {inst.candidates[s.left] for s in steps} | {inst.candidates[s.right] for s in steps}
    return Arrangement.from_points(picks)


def _lower_bound_p(theta: Fraction) -> int:
    """The integer ``p`` with ``1/p <= theta < 1/(p-1)``."""
    inv = 1 / theta
    p = floor(inv)
    if Fraction(1, p) > theta:
        p += 1
    return p


def gen_lower_restricted(theta) -> Instance:
    """Instance on which every restricted arrangement needs ``2p - 2`` proxies.

    After ``c_1 = 0`` come pairs of candidates, each pair ``theta + eps`` past
    the previous one, with in-pair gaps alternating ``eps`` and ``2 eps``.
    """
    th = as_fraction(theta)
    if not 0 < th < 1:
        raise InvalidInstance("theta must lie strictly between 0 and 1")
    p = _lower_bound_p(th)
    if p % 2:
        eps = (1 - (p - 1) * th) / (Fraction(5 * (p - 1)) / 2)
    else:
        eps = (1 - (p - 1) * th) / (Fraction(5 * p) / 2 - 3)
    pos = [Fraction(0)]
    for pair in range(p - 1):
        pos.append(pos[-1] + th + eps)
        pos.append(pos[-1] + (eps if pair % 2 == 0 else 2 * eps))
    if pos[-1] != 1:
        raise AssertionError(f"construction spans {pos[-1]}, expected 1")
    return Instance(pos, th)


def brute_force_restricted(inst: Instance, tb: TieBreak = TieBreak.LEFT,
                           cap: int = 12) -> Solution:
    """Smallest subset of candidate positions that verifies, by exhaustive search."""
    if inst.m > cap:
        raise ValueError(f"{inst.m} candidates exceeds the brute-force cap of {cap}")
    for k in range(1, inst.m + 1):
        for subset in itertools.combinations(inst.candidates, k):
            arr = Arrangement(subset)
            if verify_arrangement(inst, arr, tb) is None:
                return Solution(k, arr)
    raise AssertionError("proxies on every candidate always verify")
