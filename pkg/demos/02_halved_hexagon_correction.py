#!/usr/bin/env python3
"""The halved-hexagon product, as usually printed, is off by a product of weights.

For n <= 1 the printed product is right.  From n = 2 on it equals the true
generating function times prod_{i<j} wt1(2x+i+j).  Enumeration settles which
is which, and the halved-hexagon recurrence holds only for the corrected one.

Run:  python demos/02_halved_hexagon_correction.py
"""

from tgflab.formulas import halved_formula
from tgflab.kuo import recurrence_check
from tgflab.matchgen import tgf, tiling_count
from tgflab.regions import hexagon, region

print(f"{'n':>2} {'x':>2}  printed==enum  corrected==enum")
for n in range(4):
    for x in range(3):
        enum = tgf(region("P", n=n, x=x))
        printed = halved_formula("P", n, x, form="printed") == enum
        corrected = halved_formula("P", n, x) == enum
        print(f"{n:>2} {x:>2}  {printed!s:>13}  {corrected!s:>15}")

print()
enum = tgf(region("P", n=2, x=1))
ratio = halved_formula("P", 2, 1, form="printed") / enum
print("printed / enumerated at n = 2, x = 1:", ratio, "  (this is wt1(5))")
print("recurrence from enumeration at n = 2, x = 1:", recurrence_check("halvedP", n=2, x=1))

# the prose count for the x,1,1,x,1,1 hexagon is x; the lattice says x + 1
print()
for x in range(1, 6):
    print(f"hexagon {x},1,1,{x},1,1 has {tiling_count(hexagon(x, 1, 1))} tilings")
