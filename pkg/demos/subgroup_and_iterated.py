"""Two consequences of the pair decomposition.

First: the set {aw + bx + cy + dz + m(wx + yz)} over all integer w, x, y, z
is exactly delta*Z for delta = gcd(a, b, c, d, m) - an additive subgroup,
with witnesses unravelled from pair decompositions.

Second: iterated sums of products.  A sum of h product terms is a full
congruence class whenever the shortest term is a single class (it absorbs
everything) or the two shortest terms are pairs with coprime-to-m
coefficients (the pair solver finishes).
"""

import math

from sumprod import IteratedSpec, solve_iterated, subgroup_witness, verify_iterated

a, b, c, d, m = 2, 4, 6, 8, 10
delta = math.gcd(a, b, c, d, m)
print(f"(a,b,c,d,m) = ({a},{b},{c},{d},{m}), delta = {delta}")
for t in (0, 2, -6, 14, 3):
    sw = subgroup_witness(a, b, c, d, m, t)
    if sw is None:
        print(f"  t={t:3d}: unreachable ({delta} does not divide {t})")
    else:
        print(f"  t={t:3d}: (w,x,y,z) = ({sw.w},{sw.x},{sw.y},{sw.z})")

print()
spec = IteratedSpec(7, ((2,), (3, 4)))
print(f"R_7(2) + R_7(3)R_7(4), base value {spec.base_value()}:")
for n in (14, 21, 15):
    res = solve_iterated(spec, n)
    if res.witness:
        vals = " + ".join("*".join(map(str, t)) for t in res.witness.values)
        print(f"  N={n}: {vals}  (verified: {verify_iterated(spec, res.witness, n)})")
    else:
        print(f"  N={n}: {res.status}")

print()
spec = IteratedSpec(2, ((1, 1), (1, 1), (1, 1, 1)))
print("R_2(1)R_2(1) + R_2(1)R_2(1) + R_2(1)R_2(1)R_2(1), base value 3:")
for n in (3, 11, -7, 8):
    res = solve_iterated(spec, n)
    if res.witness:
        vals = " + ".join("*".join(map(str, t)) for t in res.witness.values)
        print(f"  N={n}: {vals}")
    else:
        print(f"  N={n}: {res.status}")

print()
print("shape (3,3) is outside the decidable cases:",
      solve_iterated(IteratedSpec(5, ((1, 1, 1), (2, 2, 2))), 9).status)
