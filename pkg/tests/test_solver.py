from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import k6_canonical_masks, mask_edges, brute_force_thickness_le2
from thickness_lab._kernels import python_is_planar_edges
from thickness_lab.construction import verify_decomposition
from thickness_lab.graph import Graph, complete_graph, kn_pm
from thickness_lab.planarity import is_planar_edges
from thickness_lab.solver import (
    NODE_CAP_ENV,
    SolverRefusal,
    density_lower_bound,
    edge_order,
    find_biplanar,
    thickness_exact,
)


@st.composite
def graphs(draw, max_n: int = 8) -> Graph:
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def test_k5_and_k33():
    assert thickness_exact(complete_graph(5)).thickness == 2
    k33 = Graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert thickness_exact(k33).thickness == 2


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_graphs(n):
    res = thickness_exact(complete_graph(n))
    assert res.thickness == (1 if n <= 4 else 2)
    assert verify_decomposition(complete_graph(n), res.witness).valid


def test_k4_p2():
    g = kn_pm(4, 2)
    res = thickness_exact(g)
    assert res.thickness == 2
    assert len(res.witness) == 2
    assert verify_decomposition(g, res.witness).valid


def test_k8_is_fast():
    res = thickness_exact(complete_graph(8))
    assert res.thickness == 2
    assert res.stats.nodes < 10_000


def test_edge_order_hardest_first():
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    assert edge_order(g)[0] == (0, 3)


def test_density_lower_bound():
    assert density_lower_bound(complete_graph(8)) == 2
    assert density_lower_bound(complete_graph(9)) == 2
    assert density_lower_bound(complete_graph(2)) == 1
    assert density_lower_bound(Graph(5, [])) == 1


def test_all_six_vertex_graphs_match_brute_force():
    # one representative per isomorphism class of graphs on 6 vertices
    reps = sorted(set(int(c) for c in k6_canonical_masks()))
    assert len(reps) == 156
    for mask in reps:
        edges = mask_edges(mask)
        expected = brute_force_thickness_le2(6, edges, python_is_planar_edges)
        assert thickness_exact(Graph(6, edges)).thickness == expected


@settings(max_examples=60, deadline=None)
@given(graphs(8))
def test_witness_sound(g):
    res = thickness_exact(g)
    assert res.thickness is not None
    assert res.thickness >= res.density_lower_bound
    assert verify_decomposition(g, res.witness).valid or g.n_edges == 0
    assert (res.thickness == 1) == is_planar_edges(g.n_vertices, list(g.edges))


def test_k_max_exceeded():
    res = thickness_exact(complete_graph(5), k_max=1)
    assert res.thickness is None and res.exceeds_k_max
    assert res.to_dict()["status"] == ">1"


def test_budget_refusal():
    with pytest.raises(SolverRefusal):
        thickness_exact(complete_graph(10))
    with pytest.raises(SolverRefusal):
        find_biplanar(complete_graph(10))
    assert thickness_exact(complete_graph(10), max_edges=45, k_max=1).thickness is None


def test_node_cap_refusal(monkeypatch):
    with pytest.raises(SolverRefusal):
        thickness_exact(complete_graph(9), k_max=2, node_cap=1000)
    monkeypatch.setenv(NODE_CAP_ENV, "1000")
    with pytest.raises(SolverRefusal):
        find_biplanar(complete_graph(9))


def test_find_biplanar():
    assert find_biplanar(complete_graph(4)) == [list(complete_graph(4).edges), []]
    w = find_biplanar(complete_graph(6))
    assert w is not None and verify_decomposition(complete_graph(6), w).valid
    assert find_biplanar(complete_graph(11), max_edges=60) is None  # density bound alone


@pytest.mark.parametrize("g", [complete_graph(6), kn_pm(4, 2)], ids=["K6", "K4xP2"])
def test_parallel_matches_sequential(g):
    seq = thickness_exact(g)
    par = thickness_exact(g, parallel=True, workers=2)
    assert par.thickness == seq.thickness
    assert par.witness == seq.witness


def test_result_dict():
    g = complete_graph(5)
    d = thickness_exact(g).to_dict(graph=g)
    assert d["thickness"] == 2 and d["status"] == "exact"
    assert d["witness"]["graph6"] == "D~{"
    assert len(d["witness"]["parts"]) == 2
    assert set(d["stats"]) == {"nodes", "planarity_calls", "cache_hits", "nodes_per_k"}


@pytest.mark.slow
def test_k9_not_biplanar():
    # exhaustive; far beyond desk-scale time limits without --runslow
    assert find_biplanar(complete_graph(9)) is None
