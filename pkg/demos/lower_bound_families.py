"""
How many proxies can a threshold force?
=======================================

For a sweep of thresholds we build the adversarial instance of each setting
and compare the exact optimum with the guaranteed upper bound.
"""

from fractions import Fraction as F

from proxyrep import (gen_lower_restricted, gen_lower_unrestricted, restricted_upper_bound_size,
                      solve_restricted_optimal, solve_unrestricted_optimal,
                      unrestricted_upper_bound_size)

thetas = [F(1, 2), F(3, 7), F(1, 3), F(3, 10), F(2, 7), F(1, 4), F(21, 100), F(1, 5)]

print(f"{'theta':>7} | {'pinned opt':>10} {'bound':>5} | {'free opt':>8} {'bound':>5}")
for t in thetas:
    hard_pinned = gen_lower_restricted(t)
    hard_free = gen_lower_unrestricted(t)
    r = solve_restricted_optimal(hard_pinned).count
    u = solve_unrestricted_optimal(hard_free).count
    print(f"{str(t):>7} | {r:>10} {restricted_upper_bound_size(t):>5} | "
          f"{u:>8} {str(unrestricted_upper_bound_size(t)):>5}")

# Pinned proxies meet their bound exactly.  For free proxies the optimum on the
# evenly spaced family is ceil(1/theta), which leaves a gap to (3/2) ceil(1/theta).
