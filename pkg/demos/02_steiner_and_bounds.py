#!/usr/bin/env python3
"""Steiner distances of 3-sets and the 3-Steiner diameter, which lower
bounds the 3-rainbow index and is additive over Cartesian products."""

import random

from rainbowindex import (
    all_pairs_distances,
    cartesian_product,
    complete,
    cycle,
    diameter,
    lower_bound,
    path,
    rx_exact,
    sdiam3,
    steiner_distance_3,
)

print("== Distances ==")
c6 = cycle(6)
d = all_pairs_distances(c6)
print(f"on C_6, d(0,3) = {int(d[0, 3])}, diameter = {diameter(c6)}")

print()
print("== Steiner distance of a 3-set ==")
res = steiner_distance_3(path(5), [0, 2, 4])
print(f"P_5 with terminals 0,2,4 forces the whole path: value {res.value}, "
      f"witness {res.witness}")
res = steiner_distance_3(cycle(7), [0, 2, 4])
print(f"C_7 with terminals 0,2,4: value {res.value} "
      f"(the cycle minus its longest arc), center {res.center}")

print()
print("== sdiam3 values ==")
for name, g in [("P_4", path(4)), ("C_7", cycle(7)), ("K_5", complete(5))]:
    print(f"sdiam3({name}) = {sdiam3(g)}")

print()
print("== Additivity over Cartesian products ==")
rng = random.Random(2)
for _ in range(3):
    g = path(rng.randrange(3, 5))
    h = cycle(rng.randrange(3, 6))
    prod = cartesian_product(g, h)[0]
    print(f"sdiam3(product) = {sdiam3(prod)} "
          f"= {sdiam3(g)} + {sdiam3(h)} (operands)")

print()
print("== The bound is not always tight ==")
c7 = cycle(7)
print(f"C_7: Steiner lower bound {lower_bound(c7, 3)} "
      f"but exact index {rx_exact(c7, 3).value}")
