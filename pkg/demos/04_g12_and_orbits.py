"""
The order-12 graph with six good vertices, and good vertices in different orbits
=================================================================================
"""

from wienerlab import automorphism_orbits, encode_graph6, good_vertices, to_dot
from wienerlab.census import find_g12, find_orbit_counterexamples

g = find_g12()
good = good_vertices(g)
print("G12:", encode_graph6(g), "good:", sorted(good))
print("orbits:", [sorted(o) for o in automorphism_orbits(g)])
print(to_dot(g, name="G12", highlight=good))

# Good vertices need not be images of each other under an automorphism.
for h, u, v in find_orbit_counterexamples(13, limit=2, n_min=12):
    print(f"{encode_graph6(h)}: good {sorted(good_vertices(h))}, but {u} and {v} lie in different orbits")
