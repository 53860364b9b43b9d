"""
Cacti with a prescribed number of good vertices
===============================================

Glue k cycles at a hub, hang a path, balance with pendants, and check the
result by brute force.
"""

from wienerlab import ConstructionParams, construct, encode_graph6
from wienerlab.good import delta_profile

# Step by step for a single 7-cycle.
r = construct(ConstructionParams(c=7, k=1, p=0))
print(f"hub path length d={r.d}, W change before balancing: {r.delta_G2}")
print("pendants added:", r.pendants_at)
prof = delta_profile(r.graph, r.v1)
print("transmission changes along the path:", [prof.per_vertex_delta[u] for u in r.path_vertices])
print("total change after balancing:", prof.total_delta)
print("good vertices:", sorted(r.verified_good))
print()

# A small table: the count doubles for long cycles in the standard layout.
print(" c  k  variant         n   good")
for c, k, variant in [(5, 2, "standard"), (6, 3, "standard"), (7, 2, "standard"), (9, 3, "standard"), (9, 3, "path-attached")]:
    r = construct(ConstructionParams(c, k, 2, variant))
    print(f"{c:2d} {k:2d}  {variant:14s} {r.graph.n:4d} {len(r.verified_good):4d}")

print()
print("graph6 of the c=5, k=1 instance:", encode_graph6(construct(ConstructionParams(5, 1)).graph))
