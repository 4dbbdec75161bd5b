"""
Expand and merge, one collision at a time
=========================================

Proxy pairs start just either side of each sweep bisector and drift outward.
When the two proxies between neighbouring bisectors meet they become one
proxy, and the pairs on both sides stop moving.
"""

from fractions import Fraction as F

from proxyrep import Instance, expand_and_merge, verify_arrangement

inst = Instance([0, F(1, 5), F(3, 10), F(7, 10), 1], F(1, 5))
trace = []
final = expand_and_merge(inst, trace)

print("bisectors:", [str(b) for b in final.bisectors])
print("interval widths:", [str(w) for w in final.widths])
print("start offset:", final.eps)


def show(st):
    pairs = ", ".join(f"({l}, {r})" for l, r in zip(st.left, st.right))
    return f"pairs {pairs}  frozen {st.frozen}"


for n, st in enumerate(trace, 1):
    print(f"event {n}: moved {st.steps[-1]}  {show(st)}")

arr = final.proxies()
print("proxies:", [str(p) for p in arr], " verifies:", verify_arrangement(inst, arr) is None)
