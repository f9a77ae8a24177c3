"""Clique partitions, cluster partitions, and the whiskered constructions.

A partition spec consists of a clique partition W_1..W_d of the base graph,
a coarsening into clusters U_1..U_s (cliques sharing a cluster must have no
connecting edges), a whisker graph A_i for each clique, and a whisker graph
B_j for each cluster containing at least two cliques.  The four construction
kinds:

  pi  every cluster a single clique, every |A_i| = 1 (classic one whisker
      per clique);
  cc  all |A_i| = |B_j| = 1, whisker graphs edgeless;
  mc  whisker graphs edgeless, any sizes;
  md  whisker graphs arbitrary but each must induce a vertex decomposable
      subgraph.

The type of a construction is (d, r) with d the number of cliques and r the
number of multi-clique clusters.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, edgeless_graph

KINDS = ("pi", "cc", "mc", "md")


class WhiskerError(ValueError):
    pass


@dataclass(frozen=True)
class PartitionSpec:
    """Clique partition + cluster partition + whisker attachment graphs.

    ``cliques[i]`` is W_{i+1}; ``clusters[j]`` lists clique indices (into
    ``cliques``); ``whisker_a[i]`` is the graph A_{i+1}; ``whisker_b[j]`` is
    B for cluster j (None for single-clique clusters).
    """

    cliques: tuple[tuple[str, ...], ...]
    clusters: tuple[tuple[int, ...], ...]
    whisker_a: tuple[Graph, ...]
    whisker_b: tuple[Graph | None, ...]

    @property
    def d(self) -> int:
        return len(self.cliques)

    @property
    def r(self) -> int:
        return sum(1 for c in self.clusters if len(c) > 1)

    @property
    def type(self) -> tuple[int, int]:
        return self.d, self.r

    def multi_clusters(self) -> list[int]:
        return [j for j, c in enumerate(self.clusters) if len(c) > 1]

    def cluster_of(self, clique_index: int) -> int:
        for j, c in enumerate(self.clusters):
            if clique_index in c:
                return j
        raise WhiskerError(f"clique {clique_index} not in any cluster")

    def clique_of(self, v: str) -> int:
        for i, w in enumerate(self.cliques):
            if v in w:
                return i
        raise WhiskerError(f"vertex {v!r} not in any clique")


def default_spec(g: Graph,
                 cliques: Sequence[Iterable[str]],
                 clusters: Sequence[Iterable[int]] | None = None,
                 a_sizes: Sequence[int] | None = None,
                 b_sizes: dict[int, int] | None = None,
                 a_graphs: dict[int, Graph] | None = None,
                 b_graphs: dict[int, Graph] | None = None) -> PartitionSpec:
    """Build a spec with generated whisker vertex names a<i>.<k> / b<j>.<k>.

    Indices in generated names are 1-based.  Explicit ``a_graphs`` /
    ``b_graphs`` entries override the generated edgeless whiskers.
    """
    cl = tuple(tuple(g.sort_set(w)) for w in cliques)
    if clusters is None:
        cls = tuple((i,) for i in range(len(cl)))
    else:
        cls = tuple(tuple(sorted(c)) for c in clusters)
    a_sizes = a_sizes or [1] * len(cl)
    b_sizes = b_sizes or {}
    a_graphs = a_graphs or {}
    b_graphs = b_graphs or {}
    was = tuple(a_graphs.get(i, edgeless_graph(
        f"a{i + 1}.{k + 1}" for k in range(a_sizes[i]))) for i in range(len(cl)))
    wbs = []
    for j, c in enumerate(cls):
        if len(c) <= 1:
            wbs.append(None)
        elif j in b_graphs:
            wbs.append(b_graphs[j])
        else:
            wbs.append(edgeless_graph(
                f"b{j + 1}.{k + 1}" for k in range(b_sizes.get(j, 1))))
    return PartitionSpec(cl, cls, was, tuple(wbs))


def trivial_spec(g: Graph, a_sizes: Sequence[int] | None = None) -> PartitionSpec:
    """Singleton cliques, singleton clusters: the classic whiskering setup."""
    return default_spec(g, [(v,) for v in g.vertices], a_sizes=a_sizes)


def validate_partitions(g: Graph, spec: PartitionSpec) -> list[str]:
    """All spec invariants; returns a list of violations (empty = ok)."""
    bad: list[str] = []
    seen: set[str] = set()
    for i, w in enumerate(spec.cliques):
        if not w:
            bad.append(f"clique W{i + 1} is empty")
            continue
        for v in w:
            if v not in g:
                bad.append(f"clique W{i + 1} uses unknown vertex {v!r}")
            elif v in seen:
                bad.append(f"vertex {v!r} appears in more than one clique")
            seen.add(v)
        if all(v in g for v in w) and not g.is_clique(w):
            bad.append(f"W{i + 1} = {{{' '.join(w)}}} is not a clique")
    missing = set(g.vertices) - seen
    if missing:
        bad.append(f"vertices not covered by cliques: {' '.join(sorted(missing))}")

    used: set[int] = set()
    for j, c in enumerate(spec.clusters):
        if not c:
            bad.append(f"cluster U{j + 1} is empty")
        for i in c:
            if not 0 <= i < spec.d:
                bad.append(f"cluster U{j + 1} references missing clique {i + 1}")
            elif i in used:
                bad.append(f"clique W{i + 1} appears in more than one cluster")
            used.add(i)
        # condition (2): cliques sharing a cluster have no connecting edges
        for a in range(len(c)):
            for b in range(a + 1, len(c)):
                i1, i2 = c[a], c[b]
                if not (0 <= i1 < spec.d and 0 <= i2 < spec.d):
                    continue
                for u in spec.cliques[i1]:
                    for v in spec.cliques[i2]:
                        if u in g and v in g and g.has_edge(u, v):
                            bad.append(
                                f"edge {u}-{v} connects cliques W{i1 + 1}, W{i2 + 1}"
                                f" inside cluster U{j + 1}")
    uncovered = set(range(spec.d)) - used
    if uncovered:
        bad.append("cliques not covered by clusters: "
                   + " ".join(f"W{i + 1}" for i in sorted(uncovered)))

    if len(spec.whisker_a) != spec.d:
        bad.append("need exactly one whisker graph A_i per clique")
    if len(spec.whisker_b) != len(spec.clusters):
        bad.append("whisker_b must align with the cluster list")
    taken = set(g.vertices)
    for name, wg in ([(f"A{i + 1}", a) for i, a in enumerate(spec.whisker_a)]
                     + [(f"B{j + 1}", b) for j, b in enumerate(spec.whisker_b)]):
        if wg is None:
            continue
        if not wg.vertices:
            bad.append(f"whisker graph {name} is empty")
        for v in wg.vertices:
            if v in taken:
                bad.append(f"whisker vertex {v!r} ({name}) collides with another vertex")
            taken.add(v)
    for j, b in enumerate(spec.whisker_b):
        if j < len(spec.clusters):
            if len(spec.clusters[j]) > 1 and b is None:
                bad.append(f"multi-clique cluster U{j + 1} needs a whisker graph B")
            if len(spec.clusters[j]) <= 1 and b is not None:
                bad.append(f"single-clique cluster U{j + 1} must not carry a whisker graph B")
    return bad


@dataclass(frozen=True)
class WhiskeredGraph:
    graph: Graph
    base: Graph
    spec: PartitionSpec
    kind: str
    added: frozenset[str]

    @property
    def type(self) -> tuple[int, int]:
        return self.spec.type


def derive_kind(spec: PartitionSpec) -> str:
    """The most specific construction kind a spec qualifies for."""
    whiskers = list(spec.whisker_a) + [b for b in spec.whisker_b if b is not None]
    if any(w.edges for w in whiskers):
        return "md"
    if any(len(w.vertices) > 1 for w in whiskers):
        return "mc"
    if all(len(c) == 1 for c in spec.clusters):
        return "pi"
    return "cc"


def _check_kind(spec: PartitionSpec, kind: str) -> list[str]:
    bad = []
    whiskers = list(spec.whisker_a) + [b for b in spec.whisker_b if b is not None]
    if kind in ("pi", "cc", "mc"):
        if any(w.edges for w in whiskers):
            bad.append(f"kind={kind} requires edgeless whisker graphs")
    if kind in ("pi", "cc"):
        if any(len(w.vertices) != 1 for w in whiskers):
            bad.append(f"kind={kind} requires all |A_i| = |B_j| = 1")
    if kind == "pi":
        if any(len(c) > 1 for c in spec.clusters):
            bad.append("kind=pi requires every cluster to be a single clique")
    if kind == "md":
        from .decomposability import is_vd_graph
        for label, w in ([(f"A{i + 1}", a) for i, a in enumerate(spec.whisker_a)]
                         + [(f"B{j + 1}", b) for j, b in enumerate(spec.whisker_b)
                            if b is not None]):
            if not is_vd_graph(w):
                bad.append(f"kind=md whisker graph {label} is not vertex decomposable")
    return bad


def build_whiskered(g: Graph, spec: PartitionSpec, kind: str) -> WhiskeredGraph:
    if kind not in KINDS:
        raise WhiskerError(f"unknown kind {kind!r}")
    bad = validate_partitions(g, spec) + _check_kind(spec, kind)
    if bad:
        raise WhiskerError("invalid partition spec:\n  " + "\n  ".join(bad))

    vertices = list(g.vertices)
    edges = [tuple(e) for e in g.edges]
    added: list[str] = []
    for i, a in enumerate(spec.whisker_a):
        vertices.extend(a.vertices)
        added.extend(a.vertices)
        edges.extend(tuple(e) for e in a.edges)
        for av in a.vertices:
            edges.extend((av, w) for w in spec.cliques[i])
    for j, b in enumerate(spec.whisker_b):
        if b is None:
            continue
        vertices.extend(b.vertices)
        added.extend(b.vertices)
        edges.extend(tuple(e) for e in b.edges)
        cluster_vertices = [w for i in spec.clusters[j] for w in spec.cliques[i]]
        for bv in b.vertices:
            edges.extend((bv, w) for w in cluster_vertices)
    return WhiskeredGraph(Graph(vertices, edges), g, spec, kind, frozenset(added))


# -- structural decompositions ----------------------------------------------

def _rebuild(base: Graph,
             cliques: list[tuple[str, ...]],
             clusters: list[list[int]],
             whisker_a: list[Graph],
             whisker_b: list[Graph | None]) -> WhiskeredGraph:
    spec = PartitionSpec(tuple(cliques), tuple(tuple(c) for c in clusters),
                         tuple(whisker_a), tuple(whisker_b))
    return build_whiskered(base, spec, derive_kind(spec))


def decompose_delete(w: WhiskeredGraph, v: str) -> tuple[WhiskeredGraph, list[Graph]]:
    """W.graph minus v, as a whiskered graph on base minus v plus detached pieces.

    When v's clique disappears its whisker graph A_i detaches; when that
    leaves a cluster with a single clique, the cluster's B merges into the
    surviving clique's A.
    """
    if v not in w.base:
        raise GraphError(f"{v!r} is not a base vertex")
    spec = w.spec
    i = spec.clique_of(v)
    k = spec.cluster_of(i)
    new_base = w.base.delete_vertices([v])

    if len(spec.cliques[i]) > 1:
        cliques = list(spec.cliques)
        cliques[i] = tuple(x for x in cliques[i] if x != v)
        return _rebuild(new_base, cliques, [list(c) for c in spec.clusters],
                        list(spec.whisker_a), list(spec.whisker_b)), []

    # W_i = {v}: the clique disappears and A_i detaches.
    isolated = [w.graph.induce(spec.whisker_a[i].vertices)]
    cliques = [c for idx, c in enumerate(spec.cliques) if idx != i]
    whisker_a = [a for idx, a in enumerate(spec.whisker_a) if idx != i]
    remap = {old: new for new, old in
             enumerate(idx for idx in range(spec.d) if idx != i)}
    clusters: list[list[int]] = []
    whisker_b: list[Graph | None] = []
    for j, c in enumerate(spec.clusters):
        members = [remap[x] for x in c if x != i]
        if not members:
            continue  # cluster k was the singleton {i}; no B to account for
        if len(members) == 1 and len(c) > 1 and j == k:
            # cluster lost v's clique and only one clique remains: its B
            # vertices now whisker that clique alone, so fold B into its A
            lone = members[0]
            whisker_a[lone] = whisker_a[lone].disjoint_union(spec.whisker_b[j])
            clusters.append(members)
            whisker_b.append(None)
        else:
            clusters.append(members)
            whisker_b.append(spec.whisker_b[j])
    return _rebuild(new_base, cliques, clusters, whisker_a, whisker_b), isolated


def decompose_link(w: WhiskeredGraph, v: str) -> tuple[WhiskeredGraph, list[Graph], tuple[int, int]]:
    """W.graph minus N[v]: residual whiskered graph, detached pieces, and type.

    Removes v's clique, its A, its cluster's B and v's base neighbours.
    Cliques that vanish entirely leave their A detached; clusters that lose
    all cliques leave their B detached; a cluster left with one clique folds
    its B into that clique's A; v's own cluster mates lose their B and turn
    into singleton clusters.
    """
    if v not in w.base:
        raise GraphError(f"{v!r} is not a base vertex")
    spec = w.spec
    i = spec.clique_of(v)
    k = spec.cluster_of(i)
    removed_base = w.base.closed_neighborhood(v)
    new_base = w.base.delete_vertices(removed_base)

    cliques: list[tuple[str, ...]] = []
    whisker_a: list[Graph] = []
    remap: dict[int, int] = {}
    isolated: list[Graph] = []
    for idx, c in enumerate(spec.cliques):
        rest = tuple(x for x in c if x not in removed_base)
        if idx == i:
            continue  # v's clique: W_i and A_i are inside N[v]
        if not rest:
            isolated.append(w.graph.induce(spec.whisker_a[idx].vertices))
            continue
        remap[idx] = len(cliques)
        cliques.append(rest)
        whisker_a.append(spec.whisker_a[idx])

    clusters: list[list[int]] = []
    whisker_b: list[Graph | None] = []
    for j, c in enumerate(spec.clusters):
        members = [remap[x] for x in c if x in remap]
        if j == k:
            # B_k is adjacent to v, hence removed; surviving mates become
            # singleton clusters (condition (2) kept them untouched by N(v))
            for m in members:
                clusters.append([m])
                whisker_b.append(None)
            continue
        if not members:
            if spec.whisker_b[j] is not None:
                isolated.append(w.graph.induce(spec.whisker_b[j].vertices))
            continue
        if len(members) == 1 and len(c) > 1:
            lone = members[0]
            whisker_a[lone] = whisker_a[lone].disjoint_union(spec.whisker_b[j])
            clusters.append(members)
            whisker_b.append(None)
        else:
            clusters.append(members)
            whisker_b.append(spec.whisker_b[j])
    residual = _rebuild(new_base, cliques, clusters, whisker_a, whisker_b)
    return residual, isolated, residual.type
