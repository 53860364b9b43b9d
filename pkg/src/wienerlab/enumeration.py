"""Isomorphism-free generation of trees and connected unicyclic graphs.

Rooted trees are generated size by size as multisets of smaller rooted trees
and numbered so that every isomorphism class gets one integer id. A
unicyclic graph is its unique cycle with a rooted tree hanging from each
cycle vertex, so its isomorphism classes are exactly the cyclic sequences of
tree ids taken up to rotation and reflection. The generator emits a sequence
only when it is the lexicographically largest of its ``2c`` dihedral images,
so no deduplication store is needed and memory stays bounded.

:func:`enumerate_unicyclic_fallback` is the slow reference: every free tree
plus every missing edge, deduplicated by canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .canon import canonical_form
from .errors import GraphError
from .graph import Graph

__all__ = [
    "RootedTreeTable",
    "rooted_tree_table",
    "enumerate_rooted_trees",
    "enumerate_trees",
    "enumerate_unicyclic",
    "enumerate_unicyclic_fallback",
    "unicyclic_partitions",
    "count_unicyclic",
]


@dataclass
class RootedTreeTable:
    """All rooted trees up to a size; ``children[i]`` are child ids, non-increasing."""

    size: list[int] = field(default_factory=list)
    children: list[tuple[int, ...]] = field(default_factory=list)
    by_size: list[list[int]] = field(default_factory=lambda: [[]])

    @property
    def max_size(self) -> int:
        return len(self.by_size) - 1

    def extend_to(self, s_max: int) -> None:
        while self.max_size < s_max:
            s = self.max_size + 1
            ids = []
            for kids in list(self._multisets(s - 1, len(self.size) - 1)):
                ids.append(len(self.size))
                self.size.append(s)
                self.children.append(kids)
            self.by_size.append(ids)

    def _multisets(self, total: int, max_id: int) -> Iterator[tuple[int, ...]]:
        # non-increasing id sequences whose sizes add up to total
        if total == 0:
            yield ()
            return
        for tid in range(min(max_id, len(self.size) - 1), -1, -1):
            s = self.size[tid]
            if s > total:
                continue
            for rest in self._multisets(total - s, tid):
                yield (tid,) + rest

    def edges(self, tid: int, root: int, start: int) -> tuple[list[tuple[int, int]], int]:
        """Edges of tree ``tid`` with its root at vertex ``root``; new ids from ``start``."""
        edges = []
        stack = [(tid, root)]
        nxt = start
        while stack:
            t, r = stack.pop()
            for child in self.children[t]:
                edges.append((r, nxt))
                stack.append((child, nxt))
                nxt += 1
        return edges, nxt


_TABLE = RootedTreeTable()


def rooted_tree_table(s_max: int) -> RootedTreeTable:
    _TABLE.extend_to(s_max)
    return _TABLE


def enumerate_rooted_trees(n: int) -> Iterator[Graph]:
    """One representative per rooted tree on ``n`` vertices, root at vertex 0."""
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    table = rooted_tree_table(n)
    for tid in table.by_size[n]:
        edges, _ = table.edges(tid, 0, 1)
        yield Graph.from_edges(n, edges)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per free tree on ``n`` vertices.

    A free tree is kept in the rooting at its centroid; with two centroids,
    in the rooting whose remainder has the larger id than the branch across
    the central edge.
    """
    if n < 1:
        raise GraphError(f"need n >= 1, got {n}")
    table = rooted_tree_table(n)
    for tid in table.by_size[n]:
        kids = table.children[tid]
        sizes = [table.size[k] for k in kids]
        if any(2 * s > n for s in sizes):
            continue
        if n % 2 == 0 and sizes and 2 * sizes[0] == n:
            # remainder: root plus the other children, itself a rooted tree of size n/2
            rest = _lookup(table, kids[1:])
            if rest < kids[0]:
                continue
        edges, _ = table.edges(tid, 0, 1)
        yield Graph.from_edges(n, edges)


def _lookup(table: RootedTreeTable, kids: tuple[int, ...]) -> int:
    size = 1 + sum(table.size[k] for k in kids)
    for tid in table.by_size[size]:
        if table.children[tid] == kids:
            return tid
    raise KeyError(kids)


def _is_max_bracelet(seq: list[int]) -> bool:
    c = len(seq)
    rev = seq[::-1]
    for r in range(c):
        if seq[r:] + seq[:r] > seq:
            return False
        if rev[r:] + rev[:r] > seq:
            return False
    return True


def _bracelets(table: RootedTreeTable, n: int, c: int) -> Iterator[list[int]]:
    seq: list[int] = []

    def rec(remaining: int, slots: int, cap: int):
        if slots == 0:
            if remaining == 0 and _is_max_bracelet(seq):
                yield list(seq)
            return
        # each later slot needs at least one vertex; the first entry is the maximum
        top = remaining - (slots - 1)
        for s in range(1, top + 1):
            if slots == 1 and s != remaining:
                continue
            for tid in table.by_size[s]:
                if tid > cap:
                    break
                seq.append(tid)
                yield from rec(remaining - s, slots - 1, cap)
                seq.pop()

    first_top = n - (c - 1)
    for s in range(1, first_top + 1):
        for tid in table.by_size[s]:
            seq.append(tid)
            yield from rec(n - s, c - 1, tid)
            seq.pop()


def _unicyclic_graph(table: RootedTreeTable, n: int, seq: list[int]) -> Graph:
    c = len(seq)
    edges = [(i, (i + 1) % c) for i in range(c)]
    nxt = c
    for i, tid in enumerate(seq):
        tree_edges, nxt = table.edges(tid, i, nxt)
        edges.extend(tree_edges)
    assert nxt == n
    return Graph.from_edges(n, edges)


def unicyclic_partitions(n: int) -> list[int]:
    """Cycle lengths: the disjoint work units for parallel enumeration."""
    return list(range(3, n + 1))


def enumerate_unicyclic(n: int, cycle_length: int | None = None) -> Iterator[Graph]:
    """Each connected unicyclic graph on ``n`` vertices exactly once.

    Cycle vertices are ``0..c-1`` in cycle order. The stream runs through
    cycle lengths ascending, restricted to ``cycle_length`` if given.
    """
    if n < 3:
        raise GraphError(f"unicyclic graphs need n >= 3, got {n}")
    table = rooted_tree_table(n - 2)
    lengths = unicyclic_partitions(n) if cycle_length is None else [cycle_length]
    for c in lengths:
        if not 3 <= c <= n:
            raise GraphError(f"cycle length {c} out of range for n={n}")
        for seq in _bracelets(table, n, c):
            yield _unicyclic_graph(table, n, seq)


def count_unicyclic(n: int) -> int:
    table = rooted_tree_table(n - 2)
    return sum(1 for c in unicyclic_partitions(n) for _ in _bracelets(table, n, c))


def enumerate_unicyclic_fallback(n: int) -> Iterator[Graph]:
    """Reference generator: trees plus one edge, deduplicated by certificate."""
    if n < 3:
        raise GraphError(f"unicyclic graphs need n >= 3, got {n}")
    seen = set()
    for tree in enumerate_trees(n):
        for u in range(n):
            for v in range(u + 1, n):
                if tree.has_edge(u, v):
                    continue
                g = tree.add_edge(u, v)
                cert = canonical_form(g)
                if cert not in seen:
                    seen.add(cert)
                    yield g
