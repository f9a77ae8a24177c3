"""Simplicial complexes by facet list.

Supports deletion, link, Alexander dual, join, restriction, f/h-vectors and
reduced homology over a prime field or the rationals.  The void complex (no
facets) and the irrelevant complex (single empty facet) are distinct values.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable

from .fields import QQ, FieldSpec, rank_gf2, rank_modp, rank_rational
from .graph import Graph


class ComplexError(ValueError):
    pass


def _antichain_max(sets: Iterable[frozenset]) -> list[frozenset]:
    """Inclusion-maximal elements."""
    uniq = sorted(set(sets), key=len, reverse=True)
    out: list[frozenset] = []
    for s in uniq:
        if not any(s < t for t in out):
            out.append(s)
    return out


class SimplicialComplex:
    __slots__ = ("ambient", "facets", "_pos")

    def __init__(self, ambient: Iterable[str], facets: Iterable[Iterable[str]]):
        amb = tuple(ambient)
        pos = {v: i for i, v in enumerate(amb)}
        if len(pos) != len(amb):
            raise ComplexError("duplicate ambient vertices")
        fs = [frozenset(f) for f in facets]
        for f in fs:
            if not f <= pos.keys():
                raise ComplexError(f"facet {sorted(f)} not within ambient set")
        fs = _antichain_max(fs)
        fs.sort(key=lambda f: tuple(sorted(pos[v] for v in f)))
        self.ambient = amb
        self.facets = tuple(fs)
        self._pos = pos

    # -- basics --------------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (frozenset(),)

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    @property
    def dim(self) -> int:
        if self.is_void:
            raise ComplexError("void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.ambient == other.ambient
                and self.facets == other.facets)

    def __hash__(self) -> int:
        return hash((self.ambient, self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex(ambient={len(self.ambient)}, facets={len(self.facets)})"

    def facet_tuples(self) -> list[tuple[str, ...]]:
        return [tuple(sorted(f, key=self._pos.__getitem__)) for f in self.facets]

    def support(self) -> frozenset[str]:
        out: set[str] = set()
        for f in self.facets:
            out |= f
        return frozenset(out)

    def faces(self) -> set[frozenset[str]]:
        out: set[frozenset[str]] = set()
        for f in self.facets:
            fl = sorted(f)
            for k in range(len(fl) + 1):
                out.update(frozenset(c) for c in combinations(fl, k))
        return out

    def has_face(self, s: Iterable[str]) -> bool:
        fs = frozenset(s)
        return any(fs <= f for f in self.facets)

    def minimal_nonfaces(self) -> list[frozenset[str]]:
        """Minimal subsets of the ambient set that are not faces."""
        if self.is_void:
            return [frozenset()]
        out: list[frozenset[str]] = []
        bound = self.dim + 2
        for k in range(1, min(bound, len(self.ambient)) + 1):
            for c in combinations(self.ambient, k):
                cs = frozenset(c)
                if not self.has_face(cs) and not any(m <= cs for m in out):
                    out.append(cs)
        return out

    # -- constructions ---------------------------------------------------------

    def deletion(self, h: Iterable[str]) -> "SimplicialComplex":
        hs = frozenset(h)
        amb = tuple(v for v in self.ambient if v not in hs)
        return SimplicialComplex(amb, [f - hs for f in self.facets if not f & hs]
                                 + [f - hs for f in self.facets if f & hs])

    def link(self, h: Iterable[str]) -> "SimplicialComplex":
        hs = frozenset(h)
        if not self.has_face(hs):
            raise ComplexError(f"{sorted(hs)} is not a face; link undefined")
        amb = tuple(v for v in self.ambient if v not in hs)
        return SimplicialComplex(amb, [f - hs for f in self.facets if hs <= f])

    def deletion_and_link(self, h: Iterable[str]) -> tuple["SimplicialComplex", "SimplicialComplex"]:
        return self.deletion(h), self.link(h)

    def alexander_dual(self) -> "SimplicialComplex":
        if not self.ambient:
            raise ComplexError("Alexander dual needs a nonempty ambient set")
        amb = set(self.ambient)
        return SimplicialComplex(self.ambient,
                                 [amb - n for n in self.minimal_nonfaces()])

    def complement_facet_complex(self) -> "SimplicialComplex":
        amb = set(self.ambient)
        return SimplicialComplex(self.ambient, [amb - f for f in self.facets])

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        overlap = set(self.ambient) & set(other.ambient)
        if overlap:
            raise ComplexError(f"ambient sets overlap: {sorted(overlap)}")
        return SimplicialComplex(self.ambient + other.ambient,
                                 [f1 | f2 for f1 in self.facets for f2 in other.facets])

    def restriction(self, w: Iterable[str]) -> "SimplicialComplex":
        ws = frozenset(w)
        amb = tuple(v for v in self.ambient if v in ws)
        return SimplicialComplex(amb, [f & ws for f in self.facets])

    # -- enumerative invariants -------------------------------------------------

    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_d)."""
        if self.is_void:
            raise ComplexError("void complex has no f-vector")
        counts = [0] * (self.dim + 2)
        for f in self.faces():
            counts[len(f)] += 1
        return tuple(counts)

    def h_vector(self) -> tuple[int, ...]:
        """Binomial transform of the f-vector: (h_0, ..., h_{d+1}).

        For nonpure complexes this is the same formal transform with
        d = dim.
        """
        f = self.f_vector()
        d = self.dim
        return tuple(
            sum((-1) ** (k - i) * comb(d + 1 - i, k - i) * f[i]
                for i in range(k + 1))
            for k in range(d + 2))

    def purity_range(self) -> tuple[int, int]:
        """(min facet dim, max facet dim); pure iff the two agree."""
        if self.is_void:
            raise ComplexError("void complex has no purity range")
        sizes = [len(f) for f in self.facets]
        return min(sizes) - 1, max(sizes) - 1

    @property
    def is_pure(self) -> bool:
        lo, hi = self.purity_range()
        return lo == hi

    def euler_characteristic_reduced(self) -> int:
        f = self.f_vector()
        return -f[0] + sum((-1) ** k * f[k + 1] for k in range(self.dim + 1))

    # -- homology ---------------------------------------------------------------

    def reduced_homology_dims(self, k: FieldSpec = QQ) -> dict[int, int]:
        """Dims of reduced homology over k, as {i: dim} for i = -1 .. dim.

        Void complex: empty mapping (all zero).  Irrelevant complex: {-1: 1}.
        """
        if self.is_void:
            return {}
        return homology_of_faces(self.faces(), k)


def homology_of_faces(faces: set[frozenset[str]], k: FieldSpec) -> dict[int, int]:
    """Reduced homology dims of a complex given as its full face set."""
    by_dim: dict[int, list[tuple[str, ...]]] = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f)))
    top = max(by_dim)
    if top == -1:
        return {-1: 1}
    index: dict[int, dict[tuple[str, ...], int]] = {
        d: {f: i for i, f in enumerate(sorted(fs))} for d, fs in by_dim.items()}

    ranks: dict[int, int] = {}  # rank of boundary C_d -> C_{d-1}
    for d in range(0, top + 1):
        cols_faces = sorted(by_dim[d])
        rows = index[d - 1]
        if k.p == 2:
            cols = []
            for f in cols_faces:
                m = 0
                for j in range(len(f)):
                    m |= 1 << rows[f[:j] + f[j + 1:]]
                cols.append(m)
            ranks[d] = rank_gf2(cols)
        else:
            mat = [[0] * len(cols_faces) for _ in range(len(rows))]
            for ci, f in enumerate(cols_faces):
                for j in range(len(f)):
                    mat[rows[f[:j] + f[j + 1:]]][ci] = (-1) ** j
            ranks[d] = rank_rational(mat) if k.is_rational else rank_modp(mat, k.p)
    ranks[top + 1] = 0

    out = {}
    for d in range(-1, top + 1):
        n_d = len(by_dim.get(d, ()))
        out[d] = n_d - ranks.get(d, 0) - ranks[d + 1]
    return out


# -- graph-derived complexes ----------------------------------------------

def independence_complex(g: Graph) -> SimplicialComplex:
    """Ind G: facets are the maximal independent sets of G."""
    return SimplicialComplex(g.vertices, g.maximal_independent_sets())


def simplex_on(vertices: Iterable[str]) -> SimplicialComplex:
    vs = tuple(vertices)
    return SimplicialComplex(vs, [vs])
