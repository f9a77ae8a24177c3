"""Graph core: enumeration, counting, chordality, canonical orderings."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whiskers import Graph, GraphError, complete_graph, cycle_graph, path_graph
from whiskers.randinst import random_graph

from conftest import c6


def brute_independent_subsets(g):
    return [set(c) for k in range(len(g.vertices) + 1)
            for c in combinations(g.vertices, k) if g.is_independent(c)]


def brute_chordal(g):
    for k in range(4, len(g.vertices) + 1):
        for sub in combinations(g.vertices, k):
            h = g.induce(sub)
            if all(h.degree(v) == 2 for v in sub) and len(h.components()) == 1:
                return False
    return True


def graphs(max_n=9):
    return st.integers(0, max_n).flatmap(
        lambda n: st.builds(
            lambda seed, p: random_graph(random.Random(seed), n, p),
            st.integers(0, 10 ** 6), st.floats(0.05, 0.9)))


def test_construction_rejects_bad_edges():
    # endpoints not declared up front are appended in first-seen order
    assert Graph(["a"], [("a", "b")]).vertices == ("a", "b")
    with pytest.raises(GraphError):
        Graph(["a", "b"], [("a", "a")])
    with pytest.raises(GraphError):
        Graph(["a", "a"], [])


def test_basic_accessors():
    g = path_graph(["1", "2", "3"])
    assert g.has_edge("1", "2") and not g.has_edge("1", "3")
    assert g.neighbors("2") == {"1", "3"}
    assert g.closed_neighborhood("2") == {"1", "2", "3"}
    assert g.degree("1") == 1
    assert g.complement().has_edge("1", "3")
    assert g.complement().complement().edges == g.edges


def test_subgraph_ops():
    g = cycle_graph(["1", "2", "3", "4", "5"])
    h = g.induce(["1", "2", "4"])
    assert h.vertices == ("1", "2", "4") and h.edges == {frozenset(("1", "2"))}
    assert g.delete_vertices(["5"]).vertices == ("1", "2", "3", "4")
    assert set(g.delete_closed_neighborhood("1").vertices) == {"3", "4"}


def test_components_and_union():
    g = path_graph(["1", "2"]).disjoint_union(path_graph(["3", "4", "5"]))
    comps = g.components()
    assert sorted(len(c) for c in comps) == [2, 3]
    assert {"1", "2"} in comps


def test_independent_set_counts_small():
    assert complete_graph(["1", "2", "3"]).independent_set_count() == 4
    assert path_graph(["1", "2", "3"]).independent_set_count() == 5
    assert c6().independent_set_count() == 18


def test_c6_maximal_independent_sets():
    mis = {frozenset(s) for s in c6().maximal_independent_sets()}
    assert mis == {frozenset({"v1", "v3", "v5"}), frozenset({"v2", "v4", "v6"}),
                   frozenset({"v1", "v4"}), frozenset({"v2", "v5"}),
                   frozenset({"v3", "v6"})}


def test_edgeless_and_empty_graph_mis():
    assert Graph([], []).maximal_independent_sets() == [()]
    assert Graph(["a", "b"], []).maximal_independent_sets() == [("a", "b")]


@settings(max_examples=60, deadline=None)
@given(graphs(8))
def test_mis_and_count_match_brute_force(g):
    brute = brute_independent_subsets(g)
    assert g.independent_set_count() == len(brute)
    brute_max = {frozenset(s) for s in brute
                 if not any(set(s) < t for t in brute)}
    assert {frozenset(s) for s in g.maximal_independent_sets()} == brute_max


@settings(max_examples=60, deadline=None)
@given(graphs(8))
def test_cover_bijection(g):
    full = set(g.vertices)
    mis = g.maximal_independent_sets()
    assert g.minimal_vertex_covers() == g.sort_sets([full - set(s) for s in mis])


def test_chordality_examples():
    ok, peo = path_graph(["1", "2", "3", "4"]).is_chordal()
    assert ok and len(peo) == 4
    ok, cyc = c6().is_chordal()
    assert not ok and len(cyc) == 6


@settings(max_examples=80, deadline=None)
@given(graphs(9))
def test_chordality_matches_brute_force(g):
    verdict, cert = g.is_chordal()
    assert verdict == brute_chordal(g)
    if not verdict:
        h = g.induce(cert)
        assert len(cert) >= 4
        assert all(h.degree(v) == 2 for v in cert)
        assert len(h.components()) == 1
    else:
        # perfect elimination ordering: later neighbors of each vertex clique
        order = list(cert)
        later = {v: set(order[i + 1:]) for i, v in enumerate(order)}
        for v in order:
            assert g.is_clique(g.neighbors(v) & later[v])


@settings(max_examples=40, deadline=None)
@given(graphs(8))
def test_deterministic_orderings(g):
    assert g.maximal_independent_sets() == g.maximal_independent_sets()
    assert g.induce(g.vertices[:4]).vertices == g.vertices[:4]
