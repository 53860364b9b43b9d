"""Immutable simple undirected graphs and structural predicates.

Vertices are always the integers ``0..n-1``. All operations that "modify" a
graph return a new :class:`Graph`; instances are hashable and safe to share
between worker processes.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import DisconnectedGraphError, GraphError, InvalidVertexError

__all__ = [
    "Graph",
    "delete_vertex",
    "attach_pendant",
    "is_connected",
    "articulation_vertices",
    "biconnected_blocks",
    "longest_cycle_length",
    "cycle_rank",
    "is_cactus",
]


class Graph:
    """Simple undirected graph stored as sorted adjacency tuples."""

    __slots__ = ("_n", "_adj", "_hash")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        if len(adjacency) != n:
            raise GraphError(f"adjacency has {len(adjacency)} rows for n={n}")
        adj = tuple(tuple(sorted(row)) for row in adjacency)
        for v, row in enumerate(adj):
            for i, u in enumerate(row):
                if not 0 <= u < n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if i and row[i - 1] == u:
                    raise GraphError(f"parallel edge {v}-{u}")
        for v, row in enumerate(adj):
            for u in row:
                if not _contains(adj[u], v):
                    raise GraphError(f"asymmetric adjacency {v}-{u}")
        self._n = n
        self._adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if v in rows[u]:
                raise GraphError(f"parallel edge {u}-{v}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, rows)

    # named families

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, [[u for u in range(n) if u != v] for v in range(n)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """The star K_{1,leaves} with centre 0."""
        return cls.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    # accessors

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def m(self) -> int:
        return sum(len(row) for row in self._adj) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        return [len(row) for row in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return _contains(self._adj[u], v)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self._adj):
            for v in row:
                if v > u:
                    yield (u, v)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise InvalidVertexError(f"vertex {v!r} not in 0..{self._n - 1}")

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph where old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        rows: list[list[int]] = [[] for _ in range(self._n)]
        for v, row in enumerate(self._adj):
            rows[perm[v]] = [perm[u] for u in row]
        return Graph(self._n, rows)

    def add_edge(self, u: int, v: int) -> Graph:
        if self.has_edge(u, v) or u == v:
            raise GraphError(f"cannot add edge {u}-{v}")
        rows = [list(row) for row in self._adj]
        rows[u].append(v)
        rows[v].append(u)
        return Graph(self._n, rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._adj)
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self.edges())})"

    def __getstate__(self):
        return (self._n, self._adj)

    def __setstate__(self, state):
        self._n, self._adj = state
        self._hash = None


def _contains(row: tuple[int, ...], x: int) -> bool:
    lo, hi = 0, len(row)
    while lo < hi:
        mid = (lo + hi) // 2
        if row[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo < len(row) and row[lo] == x


def _unchecked(n: int, adj: Sequence[Sequence[int]]) -> Graph:
    # Internal fast constructor: caller guarantees sorted, symmetric, simple rows.
    g = Graph.__new__(Graph)
    g._n = n
    g._adj = tuple(tuple(row) for row in adj)
    g._hash = None
    return g


def delete_vertex(g: Graph, v: int) -> Graph:
    """Return ``g - v``; vertices above ``v`` shift down by one."""
    g.check_vertex(v)
    if g.n == 1:
        raise GraphError("cannot delete the only vertex")
    rows = []
    for x, row in enumerate(g.adjacency):
        if x == v:
            continue
        rows.append([u - (u > v) for u in row if u != v])
    return _unchecked(g.n - 1, rows)


def attach_pendant(g: Graph, u: int) -> Graph:
    """Add a new vertex ``n`` joined to ``u`` only."""
    g.check_vertex(u)
    n = g.n
    rows = [list(row) for row in g.adjacency]
    rows[u].append(n)
    rows.append([u])
    return _unchecked(n + 1, rows)


def attach_pendants(g: Graph, u: int, count: int) -> Graph:
    """Attach ``count`` new pendant vertices to ``u`` (ids ``n..n+count-1``)."""
    g.check_vertex(u)
    n = g.n
    rows = [list(row) for row in g.adjacency]
    rows[u].extend(range(n, n + count))
    rows.extend([u] for _ in range(count))
    return _unchecked(n + count, rows)


def bfs_distances(adj: Sequence[Sequence[int]], source: int) -> list[int]:
    """Distances from ``source``; ``-1`` marks unreachable vertices."""
    dist = [-1] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def is_connected(g: Graph) -> bool:
    return min(bfs_distances(g.adjacency, 0)) >= 0


def articulation_vertices(g: Graph) -> frozenset[int]:
    """Cut vertices of a connected graph (iterative Hopcroft-Tarjan)."""
    if not is_connected(g):
        raise DisconnectedGraphError("articulation vertices need a connected graph")
    adj = g.adjacency
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = set()
    disc[0] = low[0] = 0
    timer = 1
    root_children = 0
    # stack of (vertex, parent, next neighbour index)
    stack = [(0, -1, 0)]
    while stack:
        v, parent, i = stack[-1]
        if i < len(adj[v]):
            stack[-1] = (v, parent, i + 1)
            w = adj[v][i]
            if disc[w] < 0:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, 0))
            elif w != parent:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if parent == 0:
                    root_children += 1
                elif low[v] >= disc[parent]:
                    cut.add(parent)
    if root_children > 1:
        cut.add(0)
    return frozenset(cut)


def biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge sets of the blocks (2-connected components and bridges)."""
    adj = g.adjacency
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = 0
    blocks: list[list[tuple[int, int]]] = []
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, parent, i + 1)
                w = adj[v][i]
                if disc[w] < 0:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= disc[parent]:
                        block = []
                        while True:
                            e = edge_stack.pop()
                            block.append((min(e), max(e)))
                            if e == (parent, v):
                                break
                        blocks.append(sorted(block))
    return blocks


def cycle_rank(g: Graph) -> int:
    """Dimension of the cycle space, ``m - n + components``."""
    seen = [False] * g.n
    components = 0
    for s in range(g.n):
        if not seen[s]:
            components += 1
            for x, d in enumerate(bfs_distances(g.adjacency, s)):
                if d >= 0:
                    seen[x] = True
    return g.m - g.n + components


def is_cactus(g: Graph) -> bool:
    """Connected, and every block is a single edge or a cycle."""
    if not is_connected(g):
        return False
    for block in biconnected_blocks(g):
        vertices = {x for e in block for x in e}
        if len(block) > 1 and len(block) != len(vertices):
            return False
    return True


def longest_cycle_length(g: Graph) -> int:
    """Length of a longest simple cycle, 0 for forests.

    Exhaustive backtracking, exponential in the worst case; meant for test-size
    graphs (n up to about 20).
    """
    adj = g.adjacency
    best = 0
    on_path = [False] * g.n
    for start in range(g.n):
        # cycles are counted from their smallest vertex
        on_path[start] = True
        stack = [(start, 0)]
        depth = 1
        while stack:
            v, i = stack[-1]
            row = adj[v]
            if i < len(row):
                stack[-1] = (v, i + 1)
                w = row[i]
                if w == start and depth >= 3:
                    best = max(best, depth)
                elif w > start and not on_path[w]:
                    on_path[w] = True
                    stack.append((w, 0))
                    depth += 1
            else:
                stack.pop()
                on_path[v] = False
                depth -= 1
        if best == g.n:
            break
    return best
