"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are repeated in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import grid_optimum, random_instance  # noqa: E402
from proxyrep.elections import Profile, Side, outcome_distance  # noqa: E402
from proxyrep.geometry import Arrangement, Instance, TieBreak  # noqa: E402
from proxyrep.restricted import (brute_force_restricted, gen_lower_restricted,  # noqa: E402
                                 restricted_upper_bound_size, solve_restricted_optimal,
                                 upper_bound_restricted)
from proxyrep.unrestricted import (approx_lower_bound, dual_theta_for_k,  # noqa: E402
                                   gen_lower_unrestricted, solve_unrestricted_optimal,
                                   unrestricted_upper_bound_size, upper_bound_unrestricted)
from proxyrep.verify import (evenly_spaced, evenly_spaced_counterexample,  # noqa: E402
                             verify_arrangement)

L, R = TieBreak.LEFT, TieBreak.RIGHT
SQUEEZED = Instance([0, F(11, 30), F(19, 30), 1], F(1, 3))
PINNED_THETAS = [F(1, 2), F(1, 3), F(2, 7), F(1, 4), F(1, 5)]
PINNED_EXPECTED = [2, 4, 6, 6, 8]
FREE_THETAS = [F(3, 10), F(1, 4), F(21, 100)]
FREE_EXPECTED = [4, 4, 5]
EVEN_SPACING_THETAS = [F(1, 3), F(2, 5), F(3, 10), F(1, 2), F(7, 10), F(1, 7)]

RESULTS: dict[int, str] = {}


def random_family(seed: int, count: int, **kw) -> list[Instance]:
    rng = random.Random(seed)
    return [random_instance(rng, **kw) for _ in range(count)]


def criterion4_instances():
    return random_family(4, 200, max_m=8, max_den=60)


def criterion5_instances():
    return random_family(5, 100, max_m=7, max_den=48)


def criterion6_instances():
    return random_family(6, 50, max_m=5, max_den=24, common_den=True)


def criterion8_instances():
    return {k: random_family(800 + k, 20, max_m=8, max_den=60) for k in range(3, 13)}


def first_four_families():
    return ([SQUEEZED] + [gen_lower_restricted(t) for t in PINNED_THETAS]
            + [gen_lower_unrestricted(t) for t in FREE_THETAS] + criterion4_instances())


def bound_ok(inst: Instance) -> bool:
    """Whether every feasibility set stays within ``2jm`` convex pieces, both tie rules."""
    for tb in (L, R):
        record = []
        solve_unrestricted_optimal(inst, tb, record)
        for st in record:
            if st.n_subsets > 2 * st.index * inst.m or len(st.union) > 2 * st.index * inst.m:
                return False
    return True


def c1():
    res = solve_restricted_optimal(SQUEEZED).count
    sol = solve_unrestricted_optimal(SQUEEZED)
    ok = (res == 4 and sol.count == 3 and verify_arrangement(SQUEEZED, sol.arrangement) is None
          and sol.arrangement.bisectors == (F(11, 60), F(49, 60)))
    return ok, f"restricted {res}, unrestricted {sol.count}, proxy bisectors " \
               f"{[str(b) for b in sol.arrangement.bisectors]}"


def c2():
    got = [solve_restricted_optimal(gen_lower_restricted(t)).count for t in PINNED_THETAS]
    formula = [restricted_upper_bound_size(t) for t in PINNED_THETAS]
    return got == PINNED_EXPECTED == formula, f"counts {got}"


def c3():
    got = [solve_unrestricted_optimal(gen_lower_unrestricted(t)).count for t in FREE_THETAS]
    return got == FREE_EXPECTED, f"counts {got}"


def c4():
    bad = 0
    insts = criterion4_instances()
    for inst in insts:
        a1, a2 = upper_bound_restricted(inst), upper_bound_unrestricted(inst)
        if len(a1) > restricted_upper_bound_size(inst.theta):
            bad += 1
        if len(a2) > unrestricted_upper_bound_size(inst.theta):
            bad += 1
        for tb in (L, R):
            bad += verify_arrangement(inst, a1, tb) is not None
            bad += verify_arrangement(inst, a2, tb) is not None
    return bad == 0, f"{len(insts)} instances, {bad} failures"


def c5():
    bad = 0
    insts = criterion5_instances()
    for inst in insts:
        for tb in (L, R):
            bad += solve_restricted_optimal(inst, tb).count != brute_force_restricted(inst, tb).count
    return bad == 0, f"{len(insts)} instances, {bad} mismatches"


def c6():
    below = 0
    for inst in criterion6_instances():
        below += grid_optimum(inst) < solve_unrestricted_optimal(inst).count
    special = ([SQUEEZED] + [gen_lower_restricted(t) for t in PINNED_THETAS]
               + [gen_lower_unrestricted(t) for t in FREE_THETAS])
    unequal = [str(inst.theta) for inst in special
               if grid_optimum(inst) != solve_unrestricted_optimal(inst).count]
    return below == 0 and not unequal, \
        f"grid below exact on {below} of 50 random; unequal on families: {unequal or 'none'}"


def c7():
    bad = 0
    insts = first_four_families()
    for inst in insts:
        lower = approx_lower_bound(inst)
        u = solve_unrestricted_optimal(inst).count
        r = solve_restricted_optimal(inst).count
        bad += not (lower <= u <= r and len(upper_bound_unrestricted(inst)) <= 3 * u)
    return bad == 0, f"{len(insts)} instances, {bad} failures"


def c8():
    bad = total = 0
    for k, insts in criterion8_instances().items():
        for inst in insts:
            theta, arr = dual_theta_for_k(inst, k)
            total += 1
            bad += not (theta == F(1, (2 * k) // 3) and len(arr) <= k
                        and verify_arrangement(inst.with_theta(theta), arr) is None)
    return bad == 0, f"{total} (instance, k) pairs, {bad} failures"


def c9():
    rng = random.Random(9)
    bad = 0
    for n in range(200):
        inst = random_instance(rng, max_m=7)
        tb = rng.choice([L, R])
        solver = [solve_restricted_optimal, solve_unrestricted_optimal][n % 2]
        arr = solver(inst, tb).arrangement
        prof = Profile([F(rng.randint(0, 60), 60) for _ in range(rng.randint(1, 9))])
        for side in Side:
            bad += outcome_distance(prof, inst, arr, tb, side) > inst.theta
    skew = Instance([0, F(9, 20), 1], F(2, 5))
    d = outcome_distance(Profile([F(9, 40) + F(1, 100)]), skew, Arrangement([0, 1]))
    return bad == 0 and d > skew.theta, f"{bad} of 400 outcomes too far; counterexample distance {d}"


def c10():
    bad = []
    for k in (2, 3, 4):
        for theta in EVEN_SPACING_THETAS:
            inst = evenly_spaced_counterexample(theta, k)
            even_fails = verify_arrangement(inst, evenly_spaced(k)) is not None
            r, u = solve_restricted_optimal(inst), solve_unrestricted_optimal(inst)
            b1, b2 = upper_bound_restricted(inst), upper_bound_unrestricted(inst)
            solved = all(verify_arrangement(inst, a) is None
                         for a in (r.arrangement, u.arrangement, b1, b2))
            within = (r.count <= len(b1) <= restricted_upper_bound_size(theta)
                      and u.count <= len(b2) <= unrestricted_upper_bound_size(theta))
            if not (even_fails and solved and within):
                bad.append((k, str(theta)))
    return not bad, f"k in (2, 3, 4) over {len(EVEN_SPACING_THETAS)} thresholds, failures {bad or 'none'}"


def c11():
    insts = first_four_families() + criterion5_instances() + criterion6_instances()
    insts += [i for group in criterion8_instances().values() for i in group]
    for k, group in criterion8_instances().items():
        insts += [i.with_theta(F(1, (2 * k) // 3)) for i in group]
    insts += [evenly_spaced_counterexample(t, k) for k in (2, 3, 4) for t in EVEN_SPACING_THETAS]
    bad = sum(not bound_ok(inst) for inst in insts)
    return bad == 0, f"{len(insts)} instances solved under both rules, {bad} over the bound"


CRITERIA = {1: ("four pinned versus three free proxies", c1), 2: ("restricted lower-bound tightness", c2),
            3: ("unrestricted lower-bound tightness", c3), 4: ("upper-bound compliance", c4),
            5: ("restricted brute-force equivalence", c5),
            6: ("unrestricted grid-oracle consistency", c6), 7: ("approximation sandwich", c7),
            8: ("proxy-budget dual", c8), 9: ("election outcome closeness", c9),
            10: ("evenly spaced proxies fail", c10), 11: ("feasibility-set size bound", c11)}


def evaluate(n: int) -> tuple[bool, str]:
    title, fn = CRITERIA[n]
    ok, detail = fn()
    line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    RESULTS[n] = line
    print(line)
    return ok, line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, line = evaluate(n)
    assert ok, line


if __name__ == "__main__":
    outcomes = [evaluate(n)[0] for n in sorted(CRITERIA)]
    sys.exit(0 if all(outcomes) else 1)
