"""Wiener index, transmissions and closed forms for paths, cycles and cliques.

Distances come from breadth-first search. Pendant vertices are folded into
their neighbour before searching: a leaf ``z`` hanging on ``p`` sits at
``dist(p, y) + 1`` from every other ``y``, so only the pendant-free core is
searched and the leaves enter as integer multiplicities. This keeps
``wiener_index`` cheap on the construction graphs, which carry hundreds of
pendants on a core of a few dozen vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .errors import DisconnectedGraphError, GraphError
from .graph import Graph, bfs_distances

__all__ = [
    "DistanceRow",
    "distance_row",
    "transmission",
    "transmissions",
    "wiener_index",
    "wiener_cycle_closed",
    "wiener_path_closed",
    "wiener_complete_closed",
    "transmission_cycle_closed",
    "transmission_path_end_closed",
]


@dataclass(frozen=True)
class DistanceRow:
    """BFS distances from ``source``; ``None`` marks an unreachable vertex."""

    source: int
    dist: tuple[int | None, ...]

    @property
    def reachable(self) -> bool:
        return all(d is not None for d in self.dist)


def distance_row(g: Graph, source: int) -> DistanceRow:
    g.check_vertex(source)
    dist = bfs_distances(g.adjacency, source)
    return DistanceRow(source, tuple(d if d >= 0 else None for d in dist))


def _core_transmissions(g: Graph) -> list[int] | None:
    """Transmissions of every vertex, or ``None`` if ``g`` is disconnected."""
    n = g.n
    adj = g.adjacency
    if n <= 2:
        if n == 2 and not adj[0]:
            return None
        return [n - 1] * n
    parent = [-1] * n
    for v, row in enumerate(adj):
        if len(row) == 1 and len(adj[row[0]]) > 1:
            parent[v] = row[0]
    core = [v for v in range(n) if parent[v] < 0]
    index = {v: i for i, v in enumerate(core)}
    weight = [1] * len(core)
    for v in range(n):
        if parent[v] >= 0:
            weight[index[parent[v]]] += 1
    core_adj = [[index[u] for u in adj[v] if parent[u] < 0] for v in core]
    leaves = n - len(core)

    trans = [0] * n
    for i, v in enumerate(core):
        dist = bfs_distances(core_adj, i)
        total = 0
        for j, d in enumerate(dist):
            if d < 0:
                return None
            total += d * weight[j]
        # every leaf is one step further than its parent; own leaves included
        trans[v] = total + leaves
    for v in range(n):
        if parent[v] >= 0:
            trans[v] = trans[parent[v]] + n - 2
    return trans


def transmissions(g: Graph) -> list[int]:
    """Transmission of every vertex of a connected graph."""
    trans = _core_transmissions(g)
    if trans is None:
        raise DisconnectedGraphError("transmission is infinite in a disconnected graph")
    return trans


def transmission(g: Graph, v: int) -> int:
    """Sum of distances from ``v`` to all other vertices."""
    g.check_vertex(v)
    dist = bfs_distances(g.adjacency, v)
    if min(dist) < 0:
        raise DisconnectedGraphError("transmission is infinite in a disconnected graph")
    return sum(dist)


def wiener_index(g: Graph) -> int | float:
    """Sum of distances over unordered vertex pairs.

    Returns ``math.inf`` (a float, never an int) for disconnected graphs.
    """
    trans = _core_transmissions(g)
    if trans is None:
        return math.inf
    total = sum(trans)
    assert total % 2 == 0
    return total // 2


def wiener_cycle_closed(n: int) -> int:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    if n % 2 == 0:
        return n**3 // 8
    return (n**3 - n) // 8


def wiener_path_closed(n: int) -> int:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return comb(n + 1, 3)


def wiener_complete_closed(n: int) -> int:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return comb(n, 2)


def transmission_cycle_closed(n: int) -> int:
    """Transmission of any vertex of C_n: a*a for n = 2a, a*a + a for n = 2a + 1."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    a = n // 2
    return a * a if n % 2 == 0 else a * a + a


def transmission_path_end_closed(n: int) -> int:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return n * (n - 1) // 2
