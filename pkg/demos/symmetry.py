"""Symmetries of Yoke graphs.

Three maps generate most of the symmetry: rotating the buckets (phi),
reversing the vertex (psi) and complementing the bits (tau).  This script
shows their action on the zero vertex, compares the group they generate with
a brute-force automorphism search, and exhibits the small exception Y(1,3)
whose automorphism group is larger.
"""

from yoke import GraphParams, make_yoke_vertex, zero
from yoke.automorphisms import (
    brute_force_automorphisms,
    full_aut_structure,
    generated_group_structure,
    match_canonical,
    parse_element,
    phi,
    psi,
    tau,
)

p = GraphParams(3, 3)
z = zero(p)
v = make_yoke_vertex(p, (2, 0, 1, 1, 2))
print(f"in Y(3,3): phi(0) = {phi(z)}, tau(0) = {tau(z)}, psi{v} = {psi(v)}")

g = parse_element("tau.psi.tau.psi", p)
print(f"(tau psi)^2 reduces to {g}, since m = 3 and the buckets rotate mod 3")

for n, m in [(3, 3), (2, 4), (1, 4), (4, 1), (1, 3)]:
    q = GraphParams(n, m)
    autos = brute_force_automorphisms(q)
    matched = sum(match_canonical(a, q) is not None for a in autos)
    print(
        f"Y({n},{m}): generated {generated_group_structure(q)}, "
        f"full {full_aut_structure(q)}, search finds {len(autos)} ({matched} of the form phi^k tau^a psi^b)"
    )

# m = 2 has no structure theorem, so only the search speaks
for n in (1, 2, 3):
    print(f"Y({n},2): {len(brute_force_automorphisms(GraphParams(n, 2)))} automorphisms by search")
