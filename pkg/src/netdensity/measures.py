"""Edge and node density measures computed from triangle statistics.

Every measure except the raw triangle count maps into [0, 1]. Degenerate
0/0 and x/0 cases resolve to 0 across the board, with one deliberate
exception: the Hamming distance of an isolated edge (both punctured
neighborhoods empty) is 0, because the distance between identical sets
must vanish even though the matching similarity is conventionally 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import DiGraph, Graph, GraphError
from .triangles import (
    DirectedTriangleTable,
    EdgeTriangleTable,
    count_directed_triangles,
    count_edge_triangles,
    node_neighborhood_edges,
)

EDGE_MEASURES = (
    "t_raw",
    "t_over_n2",
    "t_over_mu",
    "overlap",
    "overlap_corrected",
    "overlap_delta",
    "overlap_index",
    "jaccard",
    "hamming",
)
NODE_MEASURES = ("cc", "cc_corrected", "cc_delta")
ARC_MEASURES = ("overlap_transitive", "overlap_cyclic")


@dataclass(frozen=True)
class MeasureTable:
    """Per-element measure values in canonical key order.

    kind is "edge", "node" or "arc"; keys are canonical (u, v) pairs or
    node ids. The graph-level constants the measure depended on travel
    along for provenance.
    """

    kind: str
    measure_id: str
    keys: tuple
    values: tuple[float, ...]
    n: int
    mu: int | None = None
    delta: int | None = None
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._index.update({k: i for i, k in enumerate(self.keys)})

    def value_of(self, key) -> float:
        try:
            return self.values[self._index[key]]
        except KeyError:
            raise GraphError(f"{key!r} is not a key of this table") from None

    def items(self):
        return zip(self.keys, self.values)

    def __len__(self) -> int:
        return len(self.keys)


def _edge_table(g: Graph, tri: EdgeTriangleTable, measure_id: str, values) -> MeasureTable:
    return MeasureTable(
        "edge", measure_id, tri.edges, tuple(values), n=g.n, mu=tri.mu, delta=tri.delta
    )


def _node_table(g: Graph, measure_id: str, values, mu=None, delta=None) -> MeasureTable:
    return MeasureTable(
        "node", measure_id, tuple(range(g.n)), tuple(values), n=g.n, mu=mu, delta=delta
    )


def raw_triangles(g: Graph, tri: EdgeTriangleTable) -> MeasureTable:
    """t(e) itself as a table; the one measure not bounded by 1."""
    return _edge_table(g, tri, "t_raw", (float(t) for t in tri.t))


def simple_normalizations(g: Graph, tri: EdgeTriangleTable) -> tuple[MeasureTable, MeasureTable]:
    """t(e) / (n - 2) and t(e) / mu; all zeros when a denominator degenerates."""
    if g.n >= 3:
        by_n = [t / (g.n - 2) for t in tri.t]
    else:
        by_n = [0.0] * len(tri.edges)
    if tri.mu > 0:
        by_mu = [t / tri.mu for t in tri.t]
    else:
        by_mu = [0.0] * len(tri.edges)
    return _edge_table(g, tri, "t_over_n2", by_n), _edge_table(g, tri, "t_over_mu", by_mu)


def overlap(g: Graph, tri: EdgeTriangleTable) -> MeasureTable:
    """Overlap weight t / (m + M - t); 0 for an isolated edge (M = 0).

    Equals the Jaccard similarity of the endpoints' neighborhoods with the
    endpoints themselves removed. 1 exactly when M = t, 0 exactly when
    t = 0.
    """
    vals = []
    for t, m, big in zip(tri.t, tri.m, tri.M):
        vals.append(0.0 if big == 0 else t / (m + big - t))
    return _edge_table(g, tri, "overlap", vals)


def overlap_corrected(g: Graph, tri: EdgeTriangleTable) -> MeasureTable:
    """Corrected overlap weight t / (mu + M - t).

    Replaces the smaller-degree term with the graph-wide maximum triangle
    count, so small-degree edges can no longer saturate the measure.
    1 exactly when mu = M = t.
    """
    mu = tri.mu
    vals = []
    for t, big in zip(tri.t, tri.M):
        vals.append(0.0 if t == 0 else t / (mu + big - t))
    return _edge_table(g, tri, "overlap_corrected", vals)


def overlap_index(g: Graph, tri: EdgeTriangleTable) -> MeasureTable:
    """t / M; 0 when M = 0."""
    vals = []
    for t, big in zip(tri.t, tri.M):
        vals.append(0.0 if big == 0 else t / big)
    return _edge_table(g, tri, "overlap_index", vals)


def jaccard_and_hamming(g: Graph, tri: EdgeTriangleTable) -> tuple[MeasureTable, MeasureTable]:
    """Jaccard similarity of punctured neighborhoods and its complement.

    Evaluated from the neighbor sets themselves rather than from the
    triangle table, so the algebraic identity with the overlap weight can
    be asserted across two independent code paths. Hamming is 1 - Jaccard
    except for the isolated edge, where both neighborhoods are empty and
    the distance is 0.
    """
    jac: list[float] = []
    ham: list[float] = []
    for u, v in tri.edges:
        x = set(g.adj[u])
        x.discard(v)
        y = set(g.adj[v])
        y.discard(u)
        union = len(x | y)
        if union == 0:
            jac.append(0.0)
            ham.append(0.0)
        else:
            jv = len(x & y) / union
            jac.append(jv)
            ham.append(1.0 - jv)
    return _edge_table(g, tri, "jaccard", jac), _edge_table(g, tri, "hamming", ham)


def overlap_directed(
    d: DiGraph, dtable: DirectedTriangleTable
) -> tuple[MeasureTable, MeasureTable]:
    """Transitive and cyclic overlap weights per arc.

    Transitive: t_t / ((outdeg u - 1) + (indeg v - 1) - t_t).
    Cyclic: t_c / (indeg u + outdeg v - t_c).
    0 whenever the numerator or denominator is 0.
    """
    ot: list[float] = []
    oc: list[float] = []
    for (u, v), tt, tc in zip(dtable.arcs, dtable.t_t, dtable.t_c):
        den_t = (d.outdeg(u) - 1) + (d.indeg(v) - 1) - tt
        ot.append(tt / den_t if tt > 0 and den_t > 0 else 0.0)
        den_c = d.indeg(u) + d.outdeg(v) - tc
        oc.append(tc / den_c if tc > 0 and den_c > 0 else 0.0)
    trans = MeasureTable("arc", "overlap_transitive", dtable.arcs, tuple(ot), n=d.n)
    cyc = MeasureTable("arc", "overlap_cyclic", dtable.arcs, tuple(oc), n=d.n)
    return trans, cyc


def clustering_coefficient(g: Graph, e_counts: Sequence[int]) -> MeasureTable:
    """Fraction of realized edges among each node's neighbors; 0 for deg <= 1.

    1 exactly when the neighborhood induces a complete graph.
    """
    vals = []
    for u in range(g.n):
        d = len(g.adj[u])
        vals.append(0.0 if d <= 1 else 2.0 * e_counts[u] / (d * (d - 1)))
    return _node_table(g, "cc", vals)


def clustering_coefficient_corrected(
    g: Graph, e_counts: Sequence[int], mu: int
) -> MeasureTable:
    """Neighborhood edge count scaled by mu * deg instead of deg * (deg - 1).

    Rewards dense neighborhoods around high-degree nodes; 0 when deg = 0
    (mu = 0 forces every count to 0 anyway).
    """
    vals = []
    for u in range(g.n):
        d = len(g.adj[u])
        vals.append(0.0 if d == 0 or mu == 0 else 2.0 * e_counts[u] / (mu * d))
    return _node_table(g, "cc_corrected", vals, mu=mu)


def delta_variants(
    g: Graph, tri: EdgeTriangleTable, e_counts: Sequence[int]
) -> tuple[MeasureTable, MeasureTable]:
    """Corrected measures with the maximum degree substituted for mu.

    Cheaper to obtain but less sensitive: delta never falls below mu + 1 on
    a graph with edges, so values shrink.
    """
    delta = tri.delta
    o_vals = []
    for t, big in zip(tri.t, tri.M):
        o_vals.append(0.0 if t == 0 else t / (delta + big - t))
    cc_vals = []
    for u in range(g.n):
        d = len(g.adj[u])
        cc_vals.append(0.0 if d == 0 or delta == 0 else 2.0 * e_counts[u] / (delta * d))
    edge = _edge_table(g, tri, "overlap_delta", o_vals)
    node = _node_table(g, "cc_delta", cc_vals, mu=tri.mu, delta=delta)
    return edge, node


def compute(
    g: Graph,
    measure_id: str,
    tri: EdgeTriangleTable | None = None,
    e_counts: Sequence[int] | None = None,
) -> MeasureTable:
    """One measure table by id for an undirected graph.

    Prerequisite tables are computed on demand when not supplied.
    """
    if measure_id not in EDGE_MEASURES and measure_id not in NODE_MEASURES:
        raise GraphError(
            f"unknown measure {measure_id!r}; valid: "
            + ", ".join(EDGE_MEASURES + NODE_MEASURES)
        )
    if tri is None:
        tri = count_edge_triangles(g)
    if measure_id == "t_raw":
        return raw_triangles(g, tri)
    if measure_id in ("t_over_n2", "t_over_mu"):
        by_n, by_mu = simple_normalizations(g, tri)
        return by_n if measure_id == "t_over_n2" else by_mu
    if measure_id == "overlap":
        return overlap(g, tri)
    if measure_id == "overlap_corrected":
        return overlap_corrected(g, tri)
    if measure_id == "overlap_index":
        return overlap_index(g, tri)
    if measure_id in ("jaccard", "hamming"):
        jac, ham = jaccard_and_hamming(g, tri)
        return jac if measure_id == "jaccard" else ham
    if e_counts is None:
        e_counts = node_neighborhood_edges(g, tri)
    if measure_id == "cc":
        return clustering_coefficient(g, e_counts)
    if measure_id == "cc_corrected":
        return clustering_coefficient_corrected(g, e_counts, tri.mu)
    if measure_id == "overlap_delta":
        return delta_variants(g, tri, e_counts)[0]
    return delta_variants(g, tri, e_counts)[1]


def compute_directed(
    d: DiGraph, measure_id: str, dtable: DirectedTriangleTable | None = None
) -> MeasureTable:
    """One arc measure table by id for a directed graph."""
    if measure_id not in ARC_MEASURES:
        raise GraphError(
            f"unknown directed measure {measure_id!r}; valid: " + ", ".join(ARC_MEASURES)
        )
    if dtable is None:
        dtable = count_directed_triangles(d)
    trans, cyc = overlap_directed(d, dtable)
    return trans if measure_id == "overlap_transitive" else cyc
