"""The dominance order on integer vectors.

One vector dominates another when each of its prefix sums is at least as
large as the other's.  Under prefix sums this is the componentwise order, so
meets, joins and Hasse distances have one-line formulas.  Box BFS confirms the
distances independently.
"""

from yoke import GraphParams
from yoke.dominance import (
    box_bfs_distance,
    chi,
    dominates,
    hasse_distance_dom,
    interval_isomorphism_check,
    join_dom,
    meet_dom,
    rank_dom,
)

s, t = (1, -2, 1), (-1, 2, -1)
print(f"s = {s}, t = {t}; prefix sums {chi(s)} and {chi(t)}")
print(f"s dominates t: {dominates(s, t)}; t dominates s: {dominates(t, s)}")
meet, join = meet_dom(s, t), join_dom(s, t)
print(f"meet {meet} (rank {rank_dom(meet)}), join {join} (rank {rank_dom(join)})")
print(f"Hasse distance {hasse_distance_dom(s, t)} = rank(join) - rank(meet) = {rank_dom(join) - rank_dom(meet)}")
print(f"box BFS agrees: {box_bfs_distance(s, t)}")

for n, m in [(3, 2), (4, 3), (6, 4)]:
    print(f"Y({n},{m}): lower and upper halves isomorphic: {interval_isomorphism_check(GraphParams(n, m))}")
