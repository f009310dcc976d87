"""Distances to the zero vertex, read off from pivots.

Run with ``python3 demos/distances.py``.  The script picks one vertex, lists
its pivots and the lengths of the paths through them, then confirms the
minimum against breadth-first search.  It ends with a small table of
diameters computed both ways.
"""

from yoke import GraphParams, bfs_distance, make_yoke_vertex, zero
from yoke.pivots import (
    diameter_formula,
    dist_to_zero_closed_form,
    ecc_formula_inputs,
    pivot_path_length,
    pivot_profile,
)
from yoke.search import bfs_diameter, geodesic_word

params = GraphParams(3, 6)
v = make_yoke_vertex(params, (2, 1, 0, 1, 1, 0, 1))
print(f"vertex {v} in Y({params.n},{params.m})")

prof = pivot_profile(v)
print(f"pivots {prof.pivots}; the two nearest the middle are {prof.p_l} and {prof.p_r}")
for p in prof.pivots:
    print(f"  path through pivot {p:2d} has length {pivot_path_length(v, p)}")

best = dist_to_zero_closed_form(v, with_pivot=True)
print(f"closed form: {best.distance} via pivot {best.pivot}; BFS: {bfs_distance(v, zero(params))}")
print("one geodesic, moves in the order applied:", ",".join(str(m) for m in geodesic_word(v)))

print("\n n  m  diam(BFS)  formula  regime")
for n, m in [(1, 4), (2, 5), (3, 3), (4, 5), (5, 2), (6, 0)]:
    p = GraphParams(n, m)
    print(f"{n:2d} {m:2d} {bfs_diameter(p):10d} {diameter_formula(p):8d}  {ecc_formula_inputs(p).case}")
