#!/usr/bin/env python3
"""Tour of the graph layer: building graphs, the three products with
their provenance maps, join, vertex splitting, and edge subdivision."""

from rainbowindex import (
    SplitSpec,
    cartesian_product,
    complete,
    cycle,
    join,
    lexicographic_product,
    path,
    split_vertex,
    star,
    strong_product,
    subdivide_edge,
)
from rainbowindex.graphs import graph_to_json_dict, product_vertex_labels, to_dot

print("== Graphs carry stable edge indices ==")
p4 = path(4)
print(f"P_4: n={p4.n}, edges={p4.edges}")
print("JSON form:", graph_to_json_dict(p4))

print()
print("== Cartesian product ==")
prod, vm, classes = cartesian_product(p4, path(3))
print(f"P_4 box P_3 has {prod.n} vertices and {prod.m} edges "
      f"(3*3 G-layer copies + 4*2 H-layer copies)")
print("vertex 7 unpacks to coordinates", vm.coords(7))
e = 5
cl = classes[e]
print(f"edge {e} = {prod.edges[e]} is a {cl.kind}-layer copy of operand edge "
      f"{cl.operand_edge} in layer {cl.layer}")

print()
print("== Strong and lexicographic products ==")
k4 = strong_product(path(2), path(2))[0]
print(f"P_2 strong P_2 is K_4: {k4.n} vertices, {k4.m} edges")
a = lexicographic_product(path(3), path(2))[0]
b = lexicographic_product(path(2), path(3))[0]
print(f"lexicographic products are asymmetric: P_3[K_2] has {a.m} edges "
      f"but K_2[P_3] has {b.m}")

print()
print("== Join ==")
fan = join(path(1), path(3))
print(f"K_1 join P_3 is a fan: {fan.n} vertices, {fan.m} edges")

print()
print("== Vertex splitting and subdivision ==")
s4 = star(4)
split, origins = split_vertex(s4, SplitSpec(0, frozenset({1}), frozenset({2, 3})))
print(f"splitting the star center: {split.n} vertices, {split.m} edges; "
      f"origin map {origins} (None marks the fresh bridge)")
c5, _ = subdivide_edge(cycle(4), 0)
print(f"subdividing an edge of C_4 gives C_5: degrees "
      f"{[c5.degree(v) for v in range(c5.n)]}")

print()
print("== DOT export with provenance labels ==")
small, vm2, _ = cartesian_product(path(2), path(2))
print(to_dot(small, edge_colors=[0, 1, 0, 1],
             vertex_labels=product_vertex_labels(vm2)))
