#!/usr/bin/env python3
"""Walk through one quartered hexagon: picture, tilings, generating function, closed form.

Run:  python demos/01_quartered_hexagon.py
"""

from tgflab import formulas
from tgflab.matchgen import tgf, tiling_count
from tgflab.regions import region

# trapezoid with x = 1 and dents at positions 1 and 3 on the base
r = region("R1", x=1, s=(1, 3))
print("R1, x = 1, s = (1, 3)   (* marks a dent, | the weight axis)")
print(r.render())
print()

print("tilings:", tiling_count(r))
enum = tgf(r)
print("TGF by enumeration:", enum)

closed = formulas.quartered_formula(1, 1, (1, 3))
print("closed form:       ", closed)
print("equal:", enum == closed)
print()

# wt1 weights are symmetric in q <-> 1/q, and at q = 1 every weight is 1
print("palindromic:", enum.is_palindromic())
print("value at q = 1:", enum.eval_at_one(), "= tiling count", tiling_count(r))
print()

# the kind-3 region shares the dents but uses the halved weight on the axis;
# its product is the kind-1 product with s shifted by one half
print("reciprocity, shifted kind 1 vs kind 3:", formulas.reciprocity_holds(1, 1, (1, 3)))
