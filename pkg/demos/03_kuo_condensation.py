#!/usr/bin/env python3
"""Kuo condensation on a dual graph, then the region recurrences it yields.

Run:  python demos/03_kuo_condensation.py
"""

import random

from tgflab import kuo
from tgflab.matchgen import dual_graph
from tgflab.regions import region

r = region("P", n=2, x=1)
g = dual_graph(r)
print(r.render())
print(f"dual graph: {len(g.vertices)} vertices, {len(g.edges)} edges, {len(kuo.faces(g))} faces")

quads = kuo.corner_instances(r)
held = sum(kuo.kuo_identity_balanced(g, *q) for q in quads)
print(f"balanced identity on the outer face: {held}/{len(quads)} corner choices")

rng = random.Random(1)
for k in range(4):
    balanced = k % 2 == 0
    g, quad = kuo.random_instance(rng, balanced)
    check = kuo.kuo_identity_balanced if balanced else kuo.kuo_identity_unbalanced
    print(f"random {'balanced' if balanced else 'unbalanced'} graph, {len(g.vertices)} vertices:", check(g, *quad))

# picking the four corners on a region's boundary turns the identity into a
# recurrence between regions of the same family
print()
oracle = kuo.EnumerationOracle()
for name in kuo.RECURRENCES:
    points = list(kuo.recurrence_grid(name, 3))
    ok = all(kuo.recurrence_check(name, oracle, **p) for p in points)
    print(f"{name:<12} {len(points):>3} parameter points  {'hold' if ok else 'FAIL'}")
