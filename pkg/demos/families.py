"""Three flip graphs that are Yoke graphs in disguise.

Colored triangle-free triangulations, arc permutations and geometric
caterpillars each come with their own flip move.  Each family of size n is
encoded as a vertex of a Yoke graph, and the script counts how many native
flips land on Yoke edges.

For caterpillars the script runs two encodings.  The literal one records 1 for
a leftward extension of the spine interval.  It reproduces the standard worked
example but does not respect flips.  Recording 1 for a rightward extension
instead gives an exact isomorphism.
"""

from yoke import GraphParams, is_adjacent
from yoke.families import arcperm, caterpillar, ctft

T = ctft.ColoredTriangulation(8, ((0, 6), (1, 6), (2, 6), (2, 5), (3, 5)))
print(f"triangulation {T.to_json()} -> {ctft.ctft_to_yoke(T)}")
print(f"after flipping chord 2       -> {ctft.ctft_to_yoke(ctft.ctft_flip(T, 2))}")

print(f"arc permutation 4321 -> {arcperm.arcperm_to_yoke((4, 3, 2, 1))}")
print("3421576 is an arc permutation:", arcperm.is_arc_permutation((3, 4, 2, 1, 5, 7, 6)))

C = caterpillar.Caterpillar(8, ((7, 0), (0, 1), (1, 2), (0, 5), (0, 4), (1, 3), (0, 6)))
print(f"caterpillar ordering {caterpillar.caterpillar_ordering(C)} -> {caterpillar.caterpillar_to_yoke(C)}")


def score(name, edges, encode):
    good = sum(is_adjacent(*(encode(x) for x in e)) for e in edges)
    print(f"  {name}: {good} of {len(edges)} flips map to Yoke edges")


n = 7
print(f"\nn = {n}")
score("triangulations", ctft.ctft_flip_edges(n), ctft.ctft_to_yoke)
score("arc permutations", arcperm.arcperm_flip_edges(n), arcperm.arcperm_to_yoke)
cat_edges = caterpillar.caterpillar_flip_edges(n)
score("caterpillars, literal bits", cat_edges, caterpillar.caterpillar_to_yoke)
score("caterpillars, complemented bits", cat_edges, caterpillar.caterpillar_to_yoke_complemented)
print(f"  Y({n},{n - 3}) has {GraphParams(n, n - 3).vertex_count()} vertices")
