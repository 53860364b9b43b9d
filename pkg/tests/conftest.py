"""Shared oracles and graph generators for the test suite.

The oracles here deliberately avoid the library's BFS and search code:
distances come from Floyd-Warshall, isomorphism from plain backtracking.
"""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from wienerlab.canon import canonical_form
from wienerlab.graph import Graph

INF = float("inf")

# brute-force oracles are slow by design; timing is not under test here
settings.register_profile("oracles", deadline=None)
settings.load_profile("oracles")


def floyd_warshall(g: Graph) -> list[list[float]]:
    n = g.n
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return d


def wiener_oracle(g: Graph) -> float:
    d = floyd_warshall(g)
    return sum(d[i][j] for i in range(g.n) for j in range(i + 1, g.n))


def connected_oracle(g: Graph) -> bool:
    return all(x < INF for x in floyd_warshall(g)[0])


def isomorphic_oracle(g: Graph, h: Graph) -> bool:
    """Backtracking search for a bijection preserving adjacency and degree."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    ga = [set(r) for r in g.adjacency]
    ha = [set(r) for r in h.adjacency]
    order = sorted(range(n), key=lambda v: -len(ga[v]))
    image = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        v = order[i]
        for x in range(n):
            if used[x] or len(ha[x]) != len(ga[v]):
                continue
            if all((image[u] in ha[x]) == (u in ga[v]) for u in order[:i]):
                image[v] = x
                used[x] = True
                if extend(i + 1):
                    return True
                used[x] = False
        image[v] = -1
        return False

    return extend(0)


def longest_cycle_oracle(g: Graph) -> int:
    """Largest vertex subset whose induced subgraph has a Hamiltonian cycle."""
    adj = [set(r) for r in g.adjacency]
    best = 0
    for size in range(3, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            first, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                cyc = (first,) + perm
                if all(cyc[(i + 1) % size] in adj[cyc[i]] for i in range(size)):
                    best = size
                    break
            if best == size:
                break
    return best


def random_tree(rng: random.Random, n: int) -> Graph:
    return Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_unicyclic(rng: random.Random, n: int) -> Graph:
    while True:
        t = random_tree(rng, n)
        u, v = rng.sample(range(n), 2)
        if not t.has_edge(u, v):
            return t.add_edge(u, v)


def random_cactus(rng: random.Random, n_target: int, lengths=(3, 4, 5, 6, 7)) -> Graph:
    """Grow a cactus by gluing cycles and pendant edges onto random vertices."""
    edges: list[tuple[int, int]] = []
    n = 1
    while n < n_target:
        at = rng.randrange(n)
        c = rng.choice(lengths)
        if rng.random() < 0.3 or n + c - 1 > n_target:
            edges.append((at, n))
            n += 1
            continue
        ring = [at] + list(range(n, n + c - 1))
        n += c - 1
        edges.extend((ring[i], ring[(i + 1) % c]) for i in range(c))
    return Graph.from_edges(n, edges)


def relabeled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def graphs_by_augmentation(n_max: int, keep=lambda g: True, connected: bool = True) -> dict[int, list[Graph]]:
    """Graphs up to isomorphism (connected ones by default) satisfying ``keep``.

    Complete for any ``keep`` closed under deleting a non-cut vertex: each
    connected graph on n vertices arises from one on n-1 vertices by adding a
    vertex with a non-empty neighbourhood. With ``connected=False`` the empty
    neighbourhood is allowed too and every graph is reached.
    """
    levels = {1: [Graph(1, [[]])]}
    for n in range(2, n_max + 1):
        seen = {}
        for g in levels[n - 1]:
            base = list(g.edges())
            for mask in range(0 if not connected else 1, 1 << (n - 1)):
                edges = base + [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
                h = Graph.from_edges(n, edges)
                if not keep(h):
                    continue
                cert = canonical_form(h)
                if cert not in seen:
                    seen[cert] = h
        levels[n] = list(seen.values())
    return levels


@st.composite
def trees(draw, min_n=1, max_n=15):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
    return Graph.from_edges(n, [(v + 1, p) for v, p in enumerate(parents)])


@st.composite
def unicyclic_graphs(draw, min_n=3, max_n=15):
    t = draw(trees(min_n=min_n, max_n=max_n))
    non_edges = [(u, v) for u in range(t.n) for v in range(u + 1, t.n) if not t.has_edge(u, v)]
    u, v = draw(st.sampled_from(non_edges))
    return t.add_edge(u, v)


@st.composite
def connected_graphs(draw, min_n=1, max_n=9):
    t = draw(trees(min_n=min_n, max_n=max_n))
    extra = draw(st.sets(st.tuples(st.integers(0, t.n - 1), st.integers(0, t.n - 1)), max_size=2 * t.n))
    edges = set(t.edges())
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(t.n, edges)


@st.composite
def cacti(draw, max_n=18, lengths=(3, 4, 5, 6, 7)):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(3, max_n))
    return random_cactus(random.Random(seed), n, lengths)


@pytest.fixture
def rng():
    return random.Random(20261014)


# acceptance reporting: one PASS/FAIL line per criterion in the terminal summary

_CRITERIA: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, [title, True, 0.0])
    if rep.when == "call":
        entry[2] += rep.duration
    if rep.failed or (rep.when == "setup" and rep.skipped):
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, seconds = _CRITERIA[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {title} ({seconds:.1f}s)")
