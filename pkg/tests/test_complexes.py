"""Facet-list complexes: duality, deletion/link, f/h vectors, homology."""

import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from whiskers import (ComplexError, SimplicialComplex, cycle_graph,
                      independence_complex, simplex_on)
from whiskers.fields import GF2, QQ
from whiskers.randinst import random_complex_facets

from conftest import c6


def complexes(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.builds(
            lambda seed: SimplicialComplex(
                [str(i + 1) for i in range(n)],
                random_complex_facets(random.Random(seed), n)),
            st.integers(0, 10 ** 6)))


def test_void_vs_irrelevant():
    void = SimplicialComplex(["1"], [])
    irr = SimplicialComplex(["1"], [()])
    assert void.is_void and not irr.is_void
    assert irr.is_irrelevant and not void.is_irrelevant
    assert void != irr
    assert irr.dim == -1
    assert irr.reduced_homology_dims(GF2) == {-1: 1}
    assert void.reduced_homology_dims(GF2) == {}


def test_facets_form_antichain():
    c = SimplicialComplex(["1", "2", "3"], [("1", "2"), ("1",), ("3",)])
    assert c.facet_tuples() == [("1", "2"), ("3",)]


def test_faces_and_nonfaces():
    c = independence_complex(cycle_graph(["1", "2", "3", "4"]))
    assert c.has_face({"1", "3"}) and not c.has_face({"1", "2"})
    nonfaces = {frozenset(f) for f in c.minimal_nonfaces()}
    assert nonfaces == {frozenset({"1", "2"}), frozenset({"2", "3"}),
                        frozenset({"3", "4"}), frozenset({"1", "4"})}


def test_full_simplex_has_void_dual():
    assert simplex_on(["1", "2"]).alexander_dual().is_void


def test_deletion_link_examples():
    c = independence_complex(c6())
    dele, link = c.deletion_and_link(["v1"])
    assert not any("v1" in f for f in dele.facets)
    for f in link.facets:
        assert c.has_face(f | {"v1"})


def test_link_of_nonface_raises():
    c = independence_complex(c6())
    with pytest.raises(ComplexError):
        c.link({"v1", "v2"})


@settings(max_examples=80, deadline=None)
@given(complexes(8))
def test_alexander_dual_involution(c):
    assert c.alexander_dual().alexander_dual() == c


@settings(max_examples=60, deadline=None)
@given(complexes(7))
def test_dual_facets_complement_minimal_nonfaces(c):
    dual_facets = {frozenset(c.ambient) - f for f in c.alexander_dual().facets}
    assert dual_facets == {frozenset(f) for f in c.minimal_nonfaces()}


@settings(max_examples=60, deadline=None)
@given(complexes(8))
def test_euler_characteristic_vs_homology(c):
    chi = c.euler_characteristic_reduced()
    for k in (GF2, QQ):
        dims = c.reduced_homology_dims(k)
        assert chi == sum((-1) ** i * d for i, d in dims.items())


@settings(max_examples=60, deadline=None)
@given(complexes(8))
def test_fh_transform_inverts(c):
    f, h = c.f_vector(), c.h_vector()
    d = c.dim
    assert f == tuple(sum(comb(d + 1 - k, j - k) * h[k] for k in range(j + 1))
                      for j in range(d + 2))
    assert sum(h) == len(c.facets) or not c.is_pure


def test_homology_known_values():
    # hollow triangle: one 1-cycle
    c = SimplicialComplex("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert c.reduced_homology_dims(QQ) == {-1: 0, 0: 0, 1: 1}
    # two points: one reduced 0-class
    c = SimplicialComplex("ab", [("a",), ("b",)])
    assert c.reduced_homology_dims(GF2)[0] == 1
    # solid simplex: acyclic
    assert all(v == 0 for v in simplex_on("abcd").reduced_homology_dims(QQ).values())
    # octahedron boundary (S^2): H2 = 1 over both fields
    oct_facets = [(x, y, z) for x in ("a1", "a2") for y in ("b1", "b2")
                  for z in ("c1", "c2")]
    c = SimplicialComplex(["a1", "a2", "b1", "b2", "c1", "c2"], oct_facets)
    for k in (GF2, QQ):
        assert c.reduced_homology_dims(k) == {-1: 0, 0: 0, 1: 0, 2: 1}


def test_join_of_complexes():
    # join of two two-point complexes is a 4-cycle: H1 = 1
    pts = lambda a, b: SimplicialComplex([a, b], [(a,), (b,)])
    j = pts("a", "b").join(pts("c", "d"))
    assert j.reduced_homology_dims(QQ) == {-1: 0, 0: 0, 1: 1}


def test_purity_and_restriction():
    c = SimplicialComplex("abcd", [("a", "b", "c"), ("c", "d")])
    assert not c.is_pure and c.purity_range() == (1, 2)
    r = c.restriction({"a", "b", "d"})
    assert {frozenset(f) for f in r.facets} == {frozenset("ab"), frozenset("d")}
