"""
Median elections through proxies
================================

Voters hand their vote to the nearest proxy.  When the proxies form a valid
arrangement, the winner of a median election changes by at most theta.
"""

import random
from fractions import Fraction as F

from proxyrep import (Arrangement, Instance, Profile, Side, outcome_distance,
                      solve_unrestricted_optimal, verify_arrangement)

rng = random.Random(0)
inst = Instance([0, F(11, 30), F(19, 30), 1], F(1, 3))
arr = solve_unrestricted_optimal(inst).arrangement

worst = F(0)
for _ in range(1000):
    prof = Profile([F(rng.randint(0, 100), 100) for _ in range(rng.randint(1, 9))])
    for side in Side:
        worst = max(worst, outcome_distance(prof, inst, arr, side=side))
print("largest winner shift over 1000 profiles:", worst, "<= theta =", inst.theta)

# Without a valid arrangement the guarantee is gone.
skew = Instance([0, F(9, 20), 1], F(2, 5))
ends = Arrangement([0, 1])
print("proxies at the ends verify:", verify_arrangement(skew, ends) is None)
lone = Profile([F(47, 200)])
print("a lone voter at 47/200 sees the winner move by", outcome_distance(lone, skew, ends))
