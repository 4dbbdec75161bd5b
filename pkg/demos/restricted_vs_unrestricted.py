"""
Free proxies beat proxies pinned to candidates
==============================================

Four candidates, two of them squeezed together in the middle.  With proxies
on candidate positions every candidate needs its own proxy; once proxies may
sit anywhere on the line, three are enough.
"""

from fractions import Fraction as F
from pathlib import Path

from proxyrep import (Arrangement, Instance, render_svg, solve_restricted_optimal,
                      solve_unrestricted_optimal, verify_arrangement)

inst = Instance([0, F(11, 30), F(19, 30), 1], F(1, 3))
print("candidates:", [str(c) for c in inst.candidates], " theta:", inst.theta)

# pinned to candidates
pinned = solve_restricted_optimal(inst)
print("restricted optimum:", pinned.count, [str(p) for p in pinned.arrangement])

# anywhere on the line
free = solve_unrestricted_optimal(inst)
print("unrestricted optimum:", free.count, [str(p) for p in free.arrangement])

# The free proxies split the voters exactly on the two candidate bisectors
# that separate far-apart candidates.
print("proxy bisectors:", [str(b) for b in free.arrangement.bisectors])
print("candidate bisectors:", [str(b) for b in inst.bisectors])

# Nudging the last proxy right by 1/15 moves its bisector off 49/60 and some
# voter ends up represented by a proxy that prefers a far candidate.
nudged = Arrangement([F(-2, 15), F(1, 2), F(7, 6) + F(1, 30)])
v = verify_arrangement(inst, nudged)
print("nudged arrangement:", v.describe(inst))

out = Path("three_proxies.svg")
out.write_text(render_svg(inst, free.arrangement))
print("wrote", out.resolve())
