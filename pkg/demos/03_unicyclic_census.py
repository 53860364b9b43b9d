"""
Census of good vertices in unicyclic graphs
===========================================

Every connected unicyclic graph up to order 12, grouped by how many good
vertices it has. Takes a few seconds.
"""

import time

from wienerlab import count_unicyclic, run_census
from wienerlab.census import compare_with_reported, format_table

for n in range(3, 13):
    print(f"unicyclic graphs on {n:2d} vertices: {count_unicyclic(n)}")

start = time.perf_counter()
rows = run_census(3, 12)
print(f"\nclassified in {time.perf_counter() - start:.1f}s\n")
print(format_table(rows))

# nothing below order 9 has a good vertex
print("\nfirst order with a good vertex:", min(r.n for r in rows if r.max_good > 0))
print("differences from the published census:", [p for r in rows for p in compare_with_reported(r)] or "none")
