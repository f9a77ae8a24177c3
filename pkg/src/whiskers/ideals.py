"""Squarefree monomial ideals and graded Betti numbers.

Two independent routes to Betti numbers of cover ideals are provided and
cross-validated: a homology oracle (Hochster-style sum of reduced homology
of vertex-subset restrictions) and the structural recursion that splits off
one base vertex of a whiskered graph at a time.

Indexing convention: a BettiTable with module="ideal" resolves the ideal I
itself, so beta_{i,j}(S/I) = beta_{i-1,j}(I) for i >= 1; module="quotient"
tables carry the (0,0) -> 1 entry of S/I.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable

from .complexes import SimplicialComplex
from .fields import GF2, FieldSpec, rank_gf2, rank_modp, rank_rational
from .graph import Graph
from .whisker import WhiskeredGraph, decompose_delete, decompose_link

DEFAULT_ORACLE_AMBIENT_BOUND = 16


class IdealError(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


def _minimal(sets: Iterable[frozenset]) -> list[frozenset]:
    uniq = sorted(set(sets), key=len)
    out: list[frozenset] = []
    for s in uniq:
        if not any(t < s or t == s for t in out):
            out.append(s)
    return out


class MonomialIdeal:
    """Squarefree monomial ideal: an antichain of vertex subsets over an
    explicit ambient vertex set.  The unit ideal is the single generator
    empty-set; the zero ideal has no generators."""

    __slots__ = ("ambient", "generators", "_pos")

    def __init__(self, ambient: Iterable[str], generators: Iterable[Iterable[str]]):
        amb = tuple(ambient)
        pos = {v: i for i, v in enumerate(amb)}
        if len(pos) != len(amb):
            raise IdealError("duplicate ambient vertices")
        gens = [frozenset(g) for g in generators]
        for g in gens:
            if not g <= pos.keys():
                raise IdealError(f"generator {sorted(g)} not within ambient set")
        self.ambient = amb
        self.generators = tuple(sorted(_minimal(gens),
                                       key=lambda g: tuple(sorted(pos[v] for v in g))))
        self._pos = pos

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == (frozenset(),)

    def generator_tuples(self) -> list[tuple[str, ...]]:
        return [tuple(sorted(g, key=self._pos.__getitem__)) for g in self.generators]

    def __eq__(self, other) -> bool:
        return (isinstance(other, MonomialIdeal)
                and self.ambient == other.ambient
                and self.generators == other.generators)

    def __hash__(self) -> int:
        return hash((self.ambient, self.generators))

    def __repr__(self) -> str:
        return f"MonomialIdeal({len(self.ambient)} vars, {len(self.generators)} gens)"


def ideal_of(source, kind: str) -> MonomialIdeal:
    """stanley-reisner / facet ideals of a complex; edge / cover ideals of a
    graph."""
    if kind in ("stanley-reisner", "facet"):
        if not isinstance(source, SimplicialComplex):
            raise IdealError(f"{kind} ideal needs a simplicial complex")
        if kind == "facet":
            return MonomialIdeal(source.ambient, source.facets)
        return MonomialIdeal(source.ambient, source.minimal_nonfaces())
    if kind in ("edge", "cover"):
        if not isinstance(source, Graph):
            raise IdealError(f"{kind} ideal needs a graph")
        if kind == "edge":
            return MonomialIdeal(source.vertices, source.edges)
        return MonomialIdeal(source.vertices, source.minimal_vertex_covers())
    raise IdealError(f"unknown ideal kind {kind!r}")


# -- Betti tables ------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    field: FieldSpec
    entries: dict[tuple[int, int], int] = dc_field(default_factory=dict)
    module: str = "ideal"  # or "quotient"

    def __post_init__(self):
        object.__setattr__(self, "entries",
                           {k: v for k, v in self.entries.items() if v})

    def __eq__(self, other) -> bool:
        return (isinstance(other, BettiTable)
                and self.field == other.field
                and self.module == other.module
                and self.entries == other.entries)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def pd(self) -> int:
        if not self.entries:
            raise IdealError("empty Betti table has no projective dimension")
        return max(i for i, _ in self.entries)

    def reg(self) -> int:
        if not self.entries:
            raise IdealError("empty Betti table has no regularity")
        return max(j - i for i, j in self.entries)

    def shifted(self, di: int, dj: int) -> "BettiTable":
        return BettiTable(self.field,
                          {(i + di, j + dj): v for (i, j), v in self.entries.items()},
                          self.module)

    def plus(self, other: "BettiTable") -> "BettiTable":
        if other.field != self.field or other.module != self.module:
            raise IdealError("cannot add Betti tables over different fields/conventions")
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return BettiTable(self.field, out, self.module)

    def as_quotient(self) -> "BettiTable":
        if self.module == "quotient":
            return self
        if self.entries == {(0, 0): 1}:  # unit ideal: S/I = 0
            return BettiTable(self.field, {}, "quotient")
        out = {(i + 1, j): v for (i, j), v in self.entries.items()}
        out[(0, 0)] = 1
        return BettiTable(self.field, out, "quotient")

    def as_ideal(self) -> "BettiTable":
        if self.module == "ideal":
            return self
        if not self.entries:  # S/I = 0: I is the unit ideal
            return BettiTable(self.field, {(0, 0): 1}, "ideal")
        if self.entries.get((0, 0)) != 1:
            raise IdealError("quotient table must carry the (0,0) -> 1 entry")
        return BettiTable(self.field,
                          {(i - 1, j): v for (i, j), v in self.entries.items() if i >= 1},
                          "ideal")

    def to_tsv(self) -> str:
        lines = ["i\tj\tbeta"]
        for (i, j) in sorted(self.entries):
            lines.append(f"{i}\t{j}\t{self.entries[(i, j)]}")
        return "\n".join(lines) + "\n"


def pd_and_reg(table: BettiTable) -> tuple[int, int]:
    return table.pd(), table.reg()


def betti_join(t1: BettiTable, t2: BettiTable) -> BettiTable:
    """Convolution of quotient-convention tables of two complexes on
    disjoint vertex sets; equals the table of their join."""
    if t1.field != t2.field:
        raise IdealError("field mismatch in join formula")
    if t1.module != "quotient" or t2.module != "quotient":
        raise IdealError("join formula takes quotient-convention tables")
    out: dict[tuple[int, int], int] = {}
    for (p, r), a in t1.entries.items():
        for (q, s), b in t2.entries.items():
            key = (p + q, r + s)
            out[key] = out.get(key, 0) + a * b
    return BettiTable(t1.field, out, "quotient")


# -- the homology oracle -------------------------------------------------------

_hom_cache: dict[tuple, dict[int, int]] = {}


def _mask_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _homology_masks(faces: set[int], k: FieldSpec) -> dict[int, int]:
    """Reduced homology dims of a complex given as face bitmasks (incl. 0)."""
    by_dim: dict[int, list[int]] = {}
    for m in faces:
        by_dim.setdefault(m.bit_count() - 1, []).append(m)
    top = max(by_dim)
    if top == -1:
        return {-1: 1}
    index = {d: {m: i for i, m in enumerate(sorted(ms))}
             for d, ms in by_dim.items()}
    ranks: dict[int, int] = {}
    for d in range(0, top + 1):
        rows = index[d - 1]
        col_masks = sorted(by_dim[d])
        if k.p == 2:
            cols = []
            for m in col_masks:
                c = 0
                for b in _mask_bits(m):
                    c |= 1 << rows[m ^ (1 << b)]
                cols.append(c)
            ranks[d] = rank_gf2(cols)
        else:
            mat = [[0] * len(col_masks) for _ in range(len(rows))]
            for ci, m in enumerate(col_masks):
                for pos, b in enumerate(_mask_bits(m)):
                    mat[rows[m ^ (1 << b)]][ci] = (-1) ** pos
            ranks[d] = rank_rational(mat) if k.is_rational else rank_modp(mat, k.p)
    ranks[top + 1] = 0
    return {d: len(by_dim.get(d, ())) - ranks.get(d, 0) - ranks[d + 1]
            for d in range(-1, top + 1)}


def _compact(masks: Iterable[int], w_bits: list[int]) -> tuple[int, ...]:
    local = {b: i for i, b in enumerate(w_bits)}
    out = []
    for m in masks:
        c = 0
        for b in _mask_bits(m):
            c |= 1 << local[b]
        out.append(c)
    return tuple(sorted(out))


def _subsets_of(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _restriction_homology(w: int, gens_w: list[int], k: FieldSpec) -> dict[int, int]:
    """Reduced homology dims of the restriction to W of the complex whose
    minimal nonfaces are gens_w (all contained in W, jointly covering W).

    Chooses between enumerating faces directly and enumerating the faces of
    the combinatorial Alexander dual (facets W minus g), whichever is
    smaller, using H~_i(D) = H~_{|W|-i-3}(D^dual).
    """
    w_bits = list(_mask_bits(w))
    nw = len(w_bits)
    dual_facets = [w & ~g for g in gens_w]
    dual_budget = sum(1 << f.bit_count() for f in dual_facets)

    # primal face enumeration with an abort cap at the dual budget
    gens_at: dict[int, list[int]] = {b: [] for b in w_bits}
    for g in gens_w:
        for b in _mask_bits(g):
            gens_at[b].append(g)
    faces: list[int] = []
    cap = dual_budget

    def rec(mask: int, start: int) -> bool:
        faces.append(mask)
        if len(faces) > cap:
            return False
        for idx in range(start, nw):
            b = w_bits[idx]
            nm = mask | (1 << b)
            if any(g & ~nm == 0 for g in gens_at[b]):
                continue
            if not rec(nm, idx + 1):
                return False
        return True

    if rec(0, 0):
        key = ("p", _compact(faces, w_bits), k.p)
        hit = _hom_cache.get(key)
        if hit is None:
            hit = _homology_masks(set(faces), k)
            _hom_cache[key] = hit
        return hit

    dual_faces: set[int] = set()
    for f in dual_facets:
        if f in dual_faces:
            continue
        dual_faces.update(_subsets_of(f))
    key = ("d", _compact(dual_faces, w_bits), k.p)
    hit = _hom_cache.get(key)
    if hit is None:
        hit = _homology_masks(dual_faces, k)
        _hom_cache[key] = hit
    return {nw - d - 3: dim for d, dim in hit.items() if dim}


def betti_oracle(ideal: MonomialIdeal, k: FieldSpec = GF2,
                 ambient_bound: int = DEFAULT_ORACLE_AMBIENT_BOUND) -> BettiTable:
    """Exact graded Betti numbers of the ideal over k.

    Sums reduced homology over all vertex-subset restrictions of the complex
    whose Stanley-Reisner ideal this is.  Only subsets in which every vertex
    lies inside some contained generator can contribute.
    """
    if ideal.is_zero:
        return BettiTable(k, {}, "ideal")
    if ideal.is_unit:
        return BettiTable(k, {(0, 0): 1}, "ideal")
    n = len(ideal.ambient)
    if n > ambient_bound:
        raise ResourceLimit(f"ambient size {n} exceeds the oracle bound {ambient_bound}")
    pos = {v: i for i, v in enumerate(ideal.ambient)}
    gen_masks = sorted({sum(1 << pos[v] for v in g) for g in ideal.generators})

    # subset-zeta DP: covered[W] = union of generators contained in W
    covered = [0] * (1 << n)
    for g in gen_masks:
        covered[g] |= g
    for b in range(n):
        bit = 1 << b
        for w in range(1 << n):
            if w & bit:
                covered[w] |= covered[w ^ bit]

    entries: dict[tuple[int, int], int] = {}
    for w in range(1, 1 << n):
        if covered[w] != w:
            continue
        gens_w = [g for g in gen_masks if g & ~w == 0]
        hdims = _restriction_homology(w, gens_w, k)
        j = w.bit_count()
        for hdeg, dim in hdims.items():
            i = j - hdeg - 2
            if i >= 0 and dim:
                entries[(i, j)] = entries.get((i, j), 0) + dim
    return BettiTable(k, entries, "ideal")


# -- recursion for cover ideals of whiskered graphs -----------------------------

def betti_recursive_cover(w: WhiskeredGraph, v: str | None = None,
                          k: FieldSpec = GF2, cutoff: int = 0,
                          oracle_bound: int = DEFAULT_ORACLE_AMBIENT_BOUND) -> BettiTable:
    """Betti table of the cover ideal of a pi/cc/mc whiskered graph by the
    one-vertex splitting recursion.

    Splitting at a base vertex u: the deletion side contributes its cover
    ideal shifted one degree up; the link side is the smaller cover ideal
    degree-shifted by |N(u)| (its generators all carry the removed closed
    neighbourhood), contributing at (i, j) and (i-1, j-1).  Once the base
    graph is down to ``cutoff`` vertices the homology oracle takes over.
    """
    if w.kind not in ("pi", "cc", "mc"):
        raise IdealError("recursion requires edgeless whisker graphs (pi/cc/mc)")
    if v is not None and v not in w.base:
        raise IdealError(f"{v!r} is not a base vertex")

    def rec(wg: WhiskeredGraph, pick: str | None) -> BettiTable:
        if len(wg.base) <= cutoff:
            return betti_oracle(ideal_of(wg.graph, "cover"), k, oracle_bound)
        u = pick if pick is not None else wg.base.vertices[0]
        m = len(wg.graph.neighbors(u))
        del_part, _ = decompose_delete(wg, u)
        link_part, _, _ = decompose_link(wg, u)
        t_del = rec(del_part, None)
        t_link = rec(link_part, None).shifted(0, m)
        return t_del.shifted(0, 1).plus(t_link).plus(t_link.shifted(1, 1))

    return rec(w, v)


# -- closed formula for pi-builds ------------------------------------------------

@dataclass(frozen=True)
class ClosedFormBetti:
    i: int
    oracle: int
    formula: int

    @property
    def discrepancy(self) -> bool:
        return self.oracle != self.formula


def betti_closed_pi(g: Graph, spec, i: int, k: FieldSpec = GF2,
                    oracle_bound: int = DEFAULT_ORACLE_AMBIENT_BOUND) -> ClosedFormBetti:
    """Evaluate the closed-form beta_{i, i+n} of the pi-build's cover ideal
    (n = base vertex count) alongside the oracle; the oracle adjudicates."""
    from .complexes import independence_complex
    from .whisker import build_whiskered

    wg = build_whiskered(g, spec, "pi")
    ind = independence_complex(g)
    if ind.is_void:
        raise IdealError("empty base graph has no independence complex f-vector")
    f = ind.f_vector()
    d = ind.dim
    formula = sum(comb(j, i) * f[j] for j in range(1, d + 2))
    table = betti_oracle(ideal_of(wg.graph, "cover"), k, oracle_bound)
    oracle = table.get(i, i + len(g.vertices))
    return ClosedFormBetti(i, oracle, formula)


def has_linear_resolution(ideal: MonomialIdeal, k: FieldSpec = GF2,
                          ambient_bound: int = DEFAULT_ORACLE_AMBIENT_BOUND) -> bool:
    """All generators in one degree e and beta_{i,j} = 0 unless j = i + e."""
    if ideal.is_zero or ideal.is_unit:
        return True
    degrees = {len(g) for g in ideal.generators}
    if len(degrees) > 1:
        return False
    e = degrees.pop()
    table = betti_oracle(ideal, k, ambient_bound)
    return all(j == i + e for (i, j) in table.entries)
