"""Exact canonical forms and automorphism tests.

Individualization-refinement: colour refinement to an equitable partition,
then branching on the first non-singleton cell. Every discrete leaf gives a
relabeled edge list; the lexicographically smallest one is the certificate.
Leaves with equal edge lists yield automorphisms, which prune sibling
branches lying in one orbit and cut back to the node where the current path
left the first path.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "canonical_labeling",
    "canonical_graph",
    "are_isomorphic",
    "automorphism_generators",
    "automorphism_orbits",
    "automorphism_check",
]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Byte string equal for two graphs exactly when they are isomorphic."""

    certificate: bytes

    def hex(self) -> str:
        return self.certificate.hex()


def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    count = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in row))) for v, row in enumerate(adj)]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [rank[s] for s in sig]
        if len(rank) == count:
            return colors
        count = len(rank)


def _individualize(colors: list[int], v: int) -> list[int]:
    cv = colors[v]
    out = [2 * c + (c == cv) for c in colors]
    out[v] = 2 * cv
    return out


class _Search:
    def __init__(self, g: Graph, colors: list[int]):
        self.adj = g.adjacency
        self.n = g.n
        self.edges = list(g.edges())
        self.first_seq: list[int] | None = None
        self.first_cert = None
        self.first_inv: list[int] | None = None
        self.best_cert = None
        self.best_lab: list[int] | None = None
        self.best_inv: list[int] | None = None
        self.autos: list[list[int]] = []
        self.colors0 = colors

    def cert_of(self, lab: list[int]):
        return tuple(sorted((lab[u], lab[v]) if lab[u] < lab[v] else (lab[v], lab[u]) for u, v in self.edges))

    def leaf(self, lab: list[int], seq: list[int]) -> int | None:
        cert = self.cert_of(lab)
        inv = [0] * self.n
        for x, l in enumerate(lab):
            inv[l] = x
        if self.first_cert is None:
            self.first_seq = list(seq)
            self.first_cert = self.best_cert = cert
            self.first_inv = self.best_inv = inv
            self.best_lab = lab
            return None
        if cert == self.first_cert:
            self.autos.append([self.first_inv[lab[x]] for x in range(self.n)])
            for i, (a, b) in enumerate(zip(seq, self.first_seq)):
                if a != b:
                    return i
            return None
        if cert == self.best_cert:
            self.autos.append([self.best_inv[lab[x]] for x in range(self.n)])
        elif cert < self.best_cert:
            self.best_cert, self.best_lab, self.best_inv = cert, lab, inv
        return None

    def orbit_finder(self, seq: list[int]):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.autos:
            if all(gamma[s] == s for s in seq):
                for x, y in enumerate(gamma):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[rx] = ry
        return find

    def visit(self, colors: list[int], seq: list[int]) -> int | None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            return self.leaf(colors, seq)
        depth = len(seq)
        explored: list[int] = []
        seen_autos = -1
        find = None
        for v in target:
            if explored:
                if seen_autos != len(self.autos):
                    find = self.orbit_finder(seq)
                    seen_autos = len(self.autos)
                rv = find(v)
                if any(find(u) == rv for u in explored):
                    continue
            explored.append(v)
            seq.append(v)
            jump = self.visit(_refine(self.adj, _individualize(colors, v)), seq)
            seq.pop()
            if jump is not None and jump < depth:
                return jump
        return None

    def run(self):
        self.visit(_refine(self.adj, self.colors0), [])
        return self


def _normalize_colors(n: int, colors: Sequence[int] | None) -> list[int]:
    if colors is None:
        return [0] * n
    if len(colors) != n:
        raise ValueError("need one colour per vertex")
    rank = {c: i for i, c in enumerate(sorted(set(colors)))}
    return [rank[c] for c in colors]


def _search(g: Graph, colors: Sequence[int] | None) -> tuple[_Search, list[int]]:
    base = _normalize_colors(g.n, colors)
    return _Search(g, base).run(), base


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> list[int]:
    """``lab[v]`` is the canonical position of vertex ``v``."""
    return list(_search(g, colors)[0].best_lab)


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> CanonicalForm:
    """Certificate of ``g``; with ``colors``, of the vertex-coloured graph."""
    s, base = _search(g, colors)
    flat = [g.n, len(s.best_cert)]
    if colors is not None:
        lab = s.best_lab
        by_label = [0] * g.n
        for v in range(g.n):
            by_label[lab[v]] = base[v]
        flat.extend(by_label)
    for e in s.best_cert:
        flat.extend(e)
    return CanonicalForm(struct.pack(f">{len(flat)}I", *flat))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_generators(g: Graph) -> list[list[int]]:
    """Automorphisms met during the canonical search (a generating set)."""
    return [list(a) for a in _search(g, None)[0].autos]


def automorphism_orbits(g: Graph) -> list[frozenset[int]]:
    s, _ = _search(g, None)
    find = s.orbit_finder([])
    groups: dict[int, set[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(o) for o in groups.values()), key=min)


def automorphism_check(g: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of ``g`` maps ``u`` to ``v``.

    Compares the canonical forms of ``g`` with ``u`` and with ``v`` singled
    out by a colour, which does not depend on the generators found.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return True
    cu = [0] * g.n
    cu[u] = 1
    cv = [0] * g.n
    cv[v] = 1
    return canonical_form(g, cu) == canonical_form(g, cv)
