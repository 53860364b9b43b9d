import networkx as nx
import pytest

from wienerlab.canon import canonical_form
from wienerlab.construct import (
    ConstructionParams,
    balance_to_g3,
    build_g1,
    build_g2,
    construct,
    expected_hub_delta,
    extend_to_g4,
)
from wienerlab.errors import ConstructionError
from wienerlab.good import delta_profile, lemma_cycle_delta, vertex_deltas
from wienerlab.graph import Graph, biconnected_blocks, cycle_rank, is_cactus, is_connected

GRID = [
    (c, k, p, variant)
    for c in range(5, 13)
    for k in (1, 2, 3, 4)
    for p in (0, 1, 3)
    for variant in (("standard", "path-attached") if c >= 7 else ("standard",))
]


def nx_delta(g: Graph, v: int) -> int:
    h = nx.Graph(list(g.edges()))
    w = nx.wiener_index(h)
    h.remove_node(v)
    return w - nx.wiener_index(h)


def test_build_g1_sizes():
    g1 = build_g1(5, 1)
    assert g1.graph.n == 7
    assert g1.graph.degrees()[:5].count(3) == 1 and g1.graph.degree(g1.cycles[0][2]) == 3
    g1 = build_g1(7, 2)
    assert g1.graph.n == 13 and g1.graph.degree(g1.w) == 4
    g1 = build_g1(5, 3)
    assert g1.graph.n == 19 and g1.graph.degree(g1.w) == 6


def test_build_g1_markers():
    g1 = build_g1(7, 3)
    for cyc, cands in zip(g1.cycles, g1.v1_per_cycle):
        assert set(cands) == {cyc[1], cyc[-1]}
        assert all(g1.graph.has_edge(g1.w, v) for v in cands)
    g1 = build_g1(6, 2)
    for cyc, (v1,) in zip(g1.cycles, g1.v1_per_cycle):
        deg3 = cyc[2]
        assert g1.graph.degree(deg3) == 3
        assert g1.graph.has_edge(v1, g1.w) and g1.graph.has_edge(v1, deg3)


def test_invalid_params():
    with pytest.raises(ConstructionError, match="no good vertices"):
        ConstructionParams(4, 1, 0)
    with pytest.raises(ConstructionError):
        ConstructionParams(5, 0, 0)
    with pytest.raises(ConstructionError):
        ConstructionParams(5, 1, -1)
    with pytest.raises(ConstructionError):
        ConstructionParams(6, 1, 0, "path-attached")
    with pytest.raises(ConstructionError):
        build_g2(Graph.cycle(5), 0, 1)


@pytest.mark.parametrize("c,d", [(5, 2), (6, 5), (9, 8)])
def test_hub_path_length(c, d):
    assert construct(ConstructionParams(c, 1)).d == d


def test_hub_delta_closed_forms():
    for c in range(7, 16):
        g1 = build_g1(c, 2, "path-attached")
        assert delta_profile(g1.graph, g1.v1).per_vertex_delta[g1.w] == expected_hub_delta(c, "path-attached")
        assert expected_hub_delta(c) == lemma_cycle_delta(c)


@pytest.mark.parametrize("c,k,variant", [(5, 1, "standard"), (6, 3, "standard"), (7, 2, "standard"), (9, 2, "path-attached")])
def test_path_deltas_decrease_to_zero(c, k, variant):
    g1 = build_g1(c, k, variant)
    d = -expected_hub_delta(c, variant)
    g2, path = build_g2(g1.graph, g1.w, d)
    assert path[d] == g1.w and len(path) == d + 1
    prof = delta_profile(g2, g1.v1).per_vertex_delta
    assert [prof[u] for u in path] == [-i for i in range(d + 1)]


@pytest.mark.parametrize("c,delta,where", [(5, 7, 2), (7, 4, 2), (6, -2, 0)])
def test_balance_branches(c, delta, where):
    g1 = build_g1(c, 1)
    d = -expected_hub_delta(c)
    g2, path = build_g2(g1.graph, g1.w, d)
    # frozen values cross-checked against networkx on the same graph
    assert nx_delta(g2, g1.v1) == delta
    g3, measured, at, count = balance_to_g3(g2, g1.v1, path)
    assert measured == delta and count == abs(delta) and at == path[where]
    assert g3.n == g2.n + abs(delta)
    assert nx_delta(g3, g1.v1) == 0


def test_balance_noop_when_already_zero():
    c11 = Graph.cycle(11)
    g3, delta, at, count = balance_to_g3(c11, 1, (0,))
    assert g3 is c11 and (delta, at, count) == (0, -1, 0)


@pytest.mark.parametrize("p", [0, 5, 100])
def test_extend_keeps_balance(p):
    g1 = build_g1(7, 1)
    g2, path = build_g2(g1.graph, g1.w, 3)
    g3, *_ = balance_to_g3(g2, g1.v1, path)
    g4 = extend_to_g4(g3, path[1], p)
    if p == 0:
        assert g4 is g3
    assert g4.n == g3.n + p
    prof = delta_profile(g4, g1.v1)
    assert prof.total_delta == 0
    assert all(prof.per_vertex_delta[x] == 0 for x in range(g3.n, g4.n))


def test_construct_examples():
    assert len(construct(ConstructionParams(5, 1, 0)).verified_good) == 1
    assert len(construct(ConstructionParams(7, 2, 3)).verified_good) == 4


@pytest.mark.parametrize("c,k,p,variant", [t for t in GRID if t[1] <= 2 and t[0] <= 10])
def test_construction_structure(c, k, p, variant):
    r = construct(ConstructionParams(c, k, p, variant))
    g = r.graph
    assert is_connected(g) and is_cactus(g)
    assert cycle_rank(g) == k
    cycles = [b for b in biconnected_blocks(g) if len(b) > 1]
    assert len(cycles) == k and all(len(b) == c for b in cycles)
    assert r.d >= 2
    assert delta_profile(g, r.v1).total_delta == 0
    assert r.exact
    assert r.pendants_at["u1"] == p
    assert r.pendants_at["u0"] + r.pendants_at["u2"] == abs(r.delta_G2)


@pytest.mark.parametrize("c", [7, 8, 9, 11])
@pytest.mark.parametrize("k", [1, 3])
def test_standard_good_vertices_are_hub_neighbours(c, k):
    r = construct(ConstructionParams(c, k, 1))
    assert r.verified_good == {v for pair in r.v1_per_cycle for v in pair}
    # every other cycle vertex strictly lowers W when deleted
    deltas = vertex_deltas(r.graph)
    for cyc in r.cycles:
        for i in range(2, c - 1):
            assert deltas[cyc[i]] > 0


@pytest.mark.parametrize("c", [5, 6, 7, 10])
@pytest.mark.parametrize("k", [1, 2])
def test_path_block_good_vertices(c, k):
    variant = "standard" if c < 7 else "path-attached"
    r = construct(ConstructionParams(c, k, 3, variant))
    assert r.verified_good == {pair[0] for pair in r.v1_per_cycle}
    deltas = vertex_deltas(r.graph)
    for cyc in r.cycles:
        assert deltas[cyc[2]] is None  # the degree-3 vertex is a cut vertex
        for i in range(3, c):
            assert deltas[cyc[i]] > 0


@pytest.mark.parametrize("c", [5, 6, 7, 8, 12])
def test_single_cycle_instances_are_unicyclic(c):
    r = construct(ConstructionParams(c, 1, 2))
    assert r.graph.m == r.graph.n
    assert len(r.verified_good) == (1 if c <= 6 else 2)


@pytest.mark.parametrize("c,k,p,variant", [(5, 1, 0, "standard"), (6, 2, 1, "standard"), (7, 2, 0, "path-attached")])
def test_mirrored_hub_choice_is_isomorphic(c, k, p, variant):
    a = construct(ConstructionParams(c, k, p, variant))
    b = construct(ConstructionParams(c, k, p, variant), mirror=True)
    assert a.graph != b.graph
    assert canonical_form(a.graph) == canonical_form(b.graph)


def test_report_record_round_trip():
    r = construct(ConstructionParams(7, 2, 3))
    fields = dict(line.split("=", 1) for line in r.to_record().splitlines())
    assert fields["good_count"] == "4" and fields["exact"] == "yes"
    assert int(fields["n"]) == r.graph.n and int(fields["d"]) == 3
    assert fields["path"].split(",")[0] == "0"
    assert sorted(map(int, fields["good_vertices"].split(","))) == sorted(r.verified_good)
