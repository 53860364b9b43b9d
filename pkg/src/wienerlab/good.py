"""Vertex-deletion behaviour of the Wiener index.

A vertex ``v`` of a connected graph is *good* when ``G - v`` is connected and
``W(G - v) == W(G)``. For a fixed deleted vertex ``v1`` the change splits
into per-vertex transmission changes ``delta(x) = t_G(x) - t_{G-v1}(x)``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import DisconnectedGraphError, DisconnectingDeletionError, GraphError
from .graph import Graph, articulation_vertices, attach_pendant, delete_vertex, is_connected
from .metrics import transmissions, wiener_index

__all__ = [
    "DeletionDelta",
    "AnalysisReport",
    "DisconnectedGraphWarning",
    "delta_profile",
    "pendant_delta_shift",
    "lemma_cycle_delta",
    "lemma_small_cycle_delta",
    "vertex_deltas",
    "good_vertices",
    "analyze",
]


class DisconnectedGraphWarning(UserWarning):
    pass


@dataclass(frozen=True)
class DeletionDelta:
    """Transmission changes caused by deleting ``deleted``.

    ``per_vertex_delta`` is keyed by the original vertex ids of ``G``.
    """

    deleted: int
    per_vertex_delta: Mapping[int, int]
    total_delta: int


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    m: int
    wiener: int
    transmissions: tuple[int, ...]
    cut_vertices: frozenset[int]
    # W(G) - W(G - v) for every non-cut v; cut vertices are absent (undefined)
    per_vertex_Delta: Mapping[int, int] = field(repr=False)
    good_vertices: frozenset[int]

    @property
    def is_soltes(self) -> bool:
        return len(self.good_vertices) == self.n

    def summary(self) -> str:
        lines = [
            f"n = {self.n}, m = {self.m}",
            f"Wiener index: {self.wiener}",
            "transmissions: " + " ".join(map(str, self.transmissions)),
            "Delta(v) = W(G) - W(G-v):",
        ]
        for v in range(self.n):
            value = self.per_vertex_Delta.get(v)
            lines.append(f"  {v}: {'undefined (disconnects)' if value is None else value}")
        good = sorted(self.good_vertices)
        lines.append(f"good vertex ids: {good}")
        lines.append(f"good vertices: {len(good)}/{self.n}; Šoltés graph: {'yes' if self.is_soltes else 'no'}")
        return "\n".join(lines)


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("graph must be connected")


def delta_profile(g: Graph, v1: int) -> DeletionDelta:
    """Per-vertex and total Wiener change for deleting ``v1``."""
    g.check_vertex(v1)
    _require_connected(g)
    if g.n < 2:
        raise GraphError("need at least two vertices")
    h = delete_vertex(g, v1)
    if not is_connected(h):
        raise DisconnectingDeletionError(f"deleting {v1} disconnects the graph")
    tg = transmissions(g)
    th = transmissions(h)
    per_vertex = {x: tg[x] - th[x - (x > v1)] for x in range(g.n) if x != v1}
    total = wiener_index(g) - wiener_index(h)
    return DeletionDelta(v1, MappingProxyType(per_vertex), total)


def pendant_delta_shift(g: Graph, v1: int, u: int) -> int:
    """delta of a new pendant attached to ``u``, measured on the enlarged graph."""
    g.check_vertex(u)
    if u == v1:
        raise GraphError("the pendant must not hang on the deleted vertex")
    plus = attach_pendant(g, u)
    return delta_profile(plus, v1).per_vertex_delta[g.n]


def lemma_cycle_delta(c: int) -> int:
    """delta(w) for a cycle of length c >= 7 glued at w, deleting a neighbour of w.

    Equals the cycle transmission minus the path-end transmission of P_{c-1}.
    """
    if c < 7:
        raise GraphError(f"cycle length must be at least 7, got {c}")
    a = c // 2
    if c % 2 == 0:
        return a * a - (2 * a * a - 3 * a + 1)
    return (a * a + a) - (2 * a * a - a)


def lemma_small_cycle_delta(c: int) -> int:
    """delta(w) for the cycle-plus-2-path block, c in {5, 6}."""
    values = {5: -2, 6: -5}
    if c not in values:
        raise GraphError(f"cycle length must be 5 or 6, got {c}")
    return values[c]


def vertex_deltas(g: Graph) -> dict[int, int | None]:
    """``W(G) - W(G - v)`` for every vertex; ``None`` where ``G - v`` is disconnected.

    Each candidate deletion is evaluated from scratch. Non-adjacent vertices
    with identical neighbourhoods are swapped by an automorphism, so one
    representative per such twin class is computed.
    """
    _require_connected(g)
    if g.n == 1:
        return {0: None}
    cut = articulation_vertices(g)
    w = wiener_index(g)
    twins: dict[tuple[int, ...], int | None] = {}
    out: dict[int, int | None] = {}
    for v in range(g.n):
        if v in cut:
            out[v] = None
            continue
        key = g.adjacency[v]
        if key not in twins:
            wv = wiener_index(delete_vertex(g, v))
            assert isinstance(wv, int), "non-cut deletion left a disconnected graph"
            twins[key] = w - wv
        out[v] = twins[key]
    return out


def good_vertices(g: Graph) -> frozenset[int]:
    """Non-cut vertices whose deletion preserves the Wiener index.

    A disconnected input yields the empty set and a
    :class:`DisconnectedGraphWarning`.
    """
    if not is_connected(g):
        warnings.warn("disconnected graph has no good vertices", DisconnectedGraphWarning, stacklevel=2)
        return frozenset()
    return frozenset(v for v, d in vertex_deltas(g).items() if d == 0)


def analyze(g: Graph) -> AnalysisReport:
    _require_connected(g)
    deltas = vertex_deltas(g)
    defined = {v: d for v, d in deltas.items() if d is not None}
    cut = frozenset(v for v, d in deltas.items() if d is None)
    good = frozenset(v for v, d in defined.items() if d == 0)
    assert not good & cut
    return AnalysisReport(
        n=g.n,
        m=g.m,
        wiener=wiener_index(g),
        transmissions=tuple(transmissions(g)),
        cut_vertices=cut,
        per_vertex_Delta=MappingProxyType(defined),
        good_vertices=good,
    )
