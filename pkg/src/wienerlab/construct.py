"""Cactus graphs with a prescribed number of good vertices.

The pipeline glues ``k`` blocks at a hub ``w`` (G1), hangs a path
``u_d ... u_0`` on the hub with ``d = -delta(w)`` (G2), balances the Wiener
change of deleting ``v1`` to zero with pendants at ``u_0`` or ``u_2`` (G3),
and finally hangs ``p`` free pendants on ``u_1`` (G4).

Blocks are either plain cycles ``C_c`` (``c >= 7``, standard variant) or a
cycle with a 2-edge path hanging from one cycle vertex (``c in {5, 6}``, or
any ``c >= 7`` with ``variant="path-attached"``).

Vertex ids are assigned in a fixed order: hub ``w = 0``, then the blocks one
after another, then ``u_{d-1} .. u_0``, then the balancing pendants, then
the ``p`` pendants on ``u_1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .errors import ConstructionError, VerificationError
from .good import delta_profile, good_vertices, lemma_cycle_delta, lemma_small_cycle_delta
from .graph import Graph, attach_pendants

__all__ = [
    "ConstructionParams",
    "ConstructionReport",
    "G1",
    "build_g1",
    "build_g2",
    "balance_to_g3",
    "extend_to_g4",
    "construct",
    "expected_hub_delta",
]

Variant = Literal["standard", "path-attached"]


@dataclass(frozen=True)
class ConstructionParams:
    c: int
    k: int
    p: int = 0
    variant: Variant = "standard"

    def __post_init__(self):
        if self.c <= 4:
            raise ConstructionError(
                f"cycle length {self.c}: graphs whose longest cycle is at most 4 have no good vertices"
            )
        if self.k < 1:
            raise ConstructionError(f"need at least one cycle, got k={self.k}")
        if self.p < 0:
            raise ConstructionError(f"pendant count must be non-negative, got p={self.p}")
        if self.variant not in ("standard", "path-attached"):
            raise ConstructionError(f"unknown variant {self.variant!r}")
        if self.variant == "path-attached" and self.c < 7:
            raise ConstructionError("the path-attached variant needs c >= 7")

    @property
    def uses_path_blocks(self) -> bool:
        return self.c in (5, 6) or self.variant == "path-attached"

    @property
    def expected_good(self) -> int:
        return self.k if self.uses_path_blocks else 2 * self.k


@dataclass(frozen=True)
class G1:
    graph: Graph
    w: int
    # cycles[i] lists the cycle of block i starting at w, w's first neighbour next
    cycles: tuple[tuple[int, ...], ...]
    # good-vertex candidates per block: both neighbours of w on a plain cycle,
    # the common neighbour of w and the degree-3 vertex on a path block
    v1_per_cycle: tuple[tuple[int, ...], ...]
    path_tails: tuple[tuple[int, int], ...] = ()

    @property
    def v1(self) -> int:
        return self.v1_per_cycle[0][0]


def build_g1(c: int, k: int, variant: Variant = "standard", *, mirror: bool = False) -> G1:
    """Glue ``k`` blocks at the hub ``w = 0``.

    ``mirror`` walks each cycle the other way round, which puts the 2-path on
    the other distance-2 vertex as seen from ``w``; it yields an isomorphic graph.
    """
    params = ConstructionParams(c, k, 0, variant)
    path_blocks = params.uses_path_blocks
    w = 0
    edges: list[tuple[int, int]] = []
    cycles = []
    candidates = []
    tails = []
    nxt = 1
    for _ in range(k):
        ring = list(range(nxt, nxt + c - 1))
        nxt += c - 1
        if mirror:
            ring.reverse()
        cyc = [w] + ring
        edges.extend((cyc[i], cyc[(i + 1) % c]) for i in range(c))
        cycles.append(tuple(cyc))
        if path_blocks:
            q1, q2 = nxt, nxt + 1
            nxt += 2
            edges.extend([(cyc[2], q1), (q1, q2)])
            tails.append((q1, q2))
            candidates.append((cyc[1],))
        else:
            candidates.append((cyc[1], cyc[-1]))
    return G1(
        graph=Graph.from_edges(nxt, edges),
        w=w,
        cycles=tuple(cycles),
        v1_per_cycle=tuple(candidates),
        path_tails=tuple(tails),
    )


def expected_hub_delta(c: int, variant: Variant = "standard") -> int:
    """Closed-form delta(w) in G1, used to cross-check the measured value."""
    if c in (5, 6):
        return lemma_small_cycle_delta(c)
    base = lemma_cycle_delta(c)
    if variant == "path-attached":
        # the 2-path tail sits at distances 3, 4 from w, and c-1, c once v1 is gone
        return base + (3 + 4) - ((c - 1) + c)
    return base


def build_g2(g1: Graph, w: int, d: int) -> tuple[Graph, tuple[int, ...]]:
    """Hang a path of length ``d`` on ``w``; returns ``(G2, path)`` with ``path[i] = u_i``."""
    if d < 2:
        raise ConstructionError(f"construction inapplicable: d = {d} < 2")
    n = g1.n
    edges = list(g1.edges())
    # u_{d-1} gets id n, ..., u_0 gets id n + d - 1
    chain = [w] + list(range(n, n + d))
    edges.extend(zip(chain, chain[1:]))
    g2 = Graph.from_edges(n + d, edges)
    path = tuple(reversed(chain))
    return g2, path


def balance_to_g3(g2: Graph, v1: int, path: tuple[int, ...]) -> tuple[Graph, int, int, int]:
    """Zero out ``W(G) - W(G - v1)`` with pendants.

    Returns ``(G3, Delta(G2), attachment vertex or -1, pendant count)``.
    """
    delta = delta_profile(g2, v1).total_delta
    if delta == 0:
        g3, at, count = g2, -1, 0
    elif delta < 0:
        # each pendant on u_0 contributes +1
        g3, at, count = attach_pendants(g2, path[0], -delta), path[0], -delta
    else:
        # each pendant on u_2 contributes -1
        g3, at, count = attach_pendants(g2, path[2], delta), path[2], delta
    check = delta_profile(g3, v1).total_delta
    if check != 0:
        raise VerificationError(f"balancing left Delta(G3) = {check}")
    return g3, delta, at, count


def extend_to_g4(g3: Graph, u1: int, p: int) -> Graph:
    """Hang ``p`` pendants on ``u_1``; each has delta 0 so Delta stays 0."""
    if p < 0:
        raise ConstructionError(f"pendant count must be non-negative, got p={p}")
    return attach_pendants(g3, u1, p) if p else g3


@dataclass(frozen=True)
class ConstructionReport:
    params: ConstructionParams
    graph: Graph
    w: int
    path_vertices: tuple[int, ...]  # path_vertices[i] = u_i, so path_vertices[d] = w
    cycles: tuple[tuple[int, ...], ...]
    v1_per_cycle: tuple[tuple[int, ...], ...]
    d: int
    delta_G2: int
    pendants_at: dict[str, int] = field(hash=False)
    verified_good: frozenset[int]
    expected_good: int

    @property
    def v1(self) -> int:
        return self.v1_per_cycle[0][0]

    @property
    def exact(self) -> bool:
        return len(self.verified_good) == self.expected_good

    def to_record(self) -> str:
        """Flat ``key=value`` text, one field per line."""
        p = self.params
        fields = [
            ("c", p.c),
            ("k", p.k),
            ("p", p.p),
            ("variant", p.variant),
            ("n", self.graph.n),
            ("m", self.graph.m),
            ("w", self.w),
            ("v1", self.v1),
            ("d", self.d),
            ("path", ",".join(map(str, reversed(self.path_vertices)))),
            ("delta_G2", self.delta_G2),
            ("pendants_u0", self.pendants_at.get("u0", 0)),
            ("pendants_u2", self.pendants_at.get("u2", 0)),
            ("pendants_u1", self.pendants_at.get("u1", 0)),
            ("candidates", ";".join(",".join(map(str, c)) for c in self.v1_per_cycle)),
            ("good_count", len(self.verified_good)),
            ("good_vertices", ",".join(map(str, sorted(self.verified_good)))),
            ("expected_good", self.expected_good),
            ("exact", "yes" if self.exact else "no"),
        ]
        return "\n".join(f"{key}={value}" for key, value in fields)


def construct(params: ConstructionParams, *, mirror: bool = False) -> ConstructionReport:
    """Run G1 -> G4 and count good vertices of the result by brute force.

    Raises :class:`VerificationError` when the measured hub delta disagrees
    with its closed form, when ``Delta(G4) != 0``, or when a proven family
    (standard variant) has the wrong number of good vertices. For the
    path-attached variant a count mismatch is reported via ``exact``.
    """
    g1 = build_g1(params.c, params.k, params.variant, mirror=mirror)
    v1 = g1.v1
    measured = delta_profile(g1.graph, v1).per_vertex_delta[g1.w]
    expected = expected_hub_delta(params.c, params.variant)
    if measured != expected:
        raise VerificationError(f"delta(w) measured {measured}, closed form {expected}")
    d = -measured

    g2, path = build_g2(g1.graph, g1.w, d)
    profile = delta_profile(g2, v1).per_vertex_delta
    for i, u in enumerate(path):
        if profile[u] != -i:
            raise VerificationError(f"delta(u_{i}) = {profile[u]}, expected {-i}")

    g3, delta_g2, at, count = balance_to_g3(g2, v1, path)
    pendants = {"u0": 0, "u2": 0, "u1": params.p}
    if count:
        pendants["u0" if at == path[0] else "u2"] = count

    g4 = extend_to_g4(g3, path[1], params.p)
    final = delta_profile(g4, v1).total_delta
    if final != 0:
        raise VerificationError(f"Delta(G4) = {final}")

    good = good_vertices(g4)
    report = ConstructionReport(
        params=params,
        graph=g4,
        w=g1.w,
        path_vertices=path,
        cycles=g1.cycles,
        v1_per_cycle=g1.v1_per_cycle,
        d=d,
        delta_G2=delta_g2,
        pendants_at=pendants,
        verified_good=good,
        expected_good=params.expected_good,
    )
    if not report.exact and params.variant == "standard":
        raise VerificationError(
            f"{len(good)} good vertices, expected {params.expected_good} for {params}"
        )
    return report
