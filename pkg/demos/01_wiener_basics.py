"""
Wiener index basics
===================

How W responds when a vertex disappears.
Run with ``python demos/01_wiener_basics.py``.
"""

from wienerlab import Graph, analyze, delete_vertex, transmissions, wiener_index
from wienerlab.metrics import wiener_cycle_closed, wiener_path_closed

# A cycle and a path, brute force next to the closed forms.
for n in (6, 7, 11):
    print(f"C{n}: W={wiener_index(Graph.cycle(n))} (closed form {wiener_cycle_closed(n)})")
    print(f"P{n}: W={wiener_index(Graph.path(n))} (closed form {wiener_path_closed(n)})")

# Transmission of each vertex; W is half their sum.
g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)])
t = transmissions(g)
print("transmissions:", t, "-> W =", sum(t) // 2)

# Deleting a vertex of a cycle leaves a path. For most n this changes W,
# but at n = 11 the two agree for every vertex.
for n in range(8, 14):
    c = Graph.cycle(n)
    print(f"n={n:2d}  W(C_n)={wiener_index(c):4d}  W(C_n - v)={wiener_index(delete_vertex(c, 0)):4d}")

print()
print(analyze(Graph.cycle(11)).summary())
