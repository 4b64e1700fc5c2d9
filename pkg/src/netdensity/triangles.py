"""Per-edge triangle counting and the per-node neighborhood-edge aggregate.

The fast path intersects sorted adjacency lists with a linear merge, so the
whole table costs O(sum over edges of deg(u) + deg(v)). A cubic brute-force
recount is kept alongside as a testing oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import DiGraph, Edge, Graph, GraphError, canonical_edge


class InternalInvariantError(RuntimeError):
    """A structural identity that must hold by construction was violated."""


def _intersection_size(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    # linear merge of two ascending sequences
    i = j = count = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            count += 1
            i += 1
            j += 1
        elif x < y:
            i += 1
        else:
            j += 1
    return count


@dataclass(frozen=True)
class EdgeTriangleTable:
    """Per-edge triangle statistics plus graph-level extremes.

    For edge (u, v): t is the number of common neighbors (the triangles the
    edge lies in), m = min(deg u, deg v) - 1, M = max(deg u, deg v) - 1.
    mu is the largest t over all edges and delta the largest degree; both
    are 0 on an edgeless graph. 0 <= t <= m <= M holds for every edge.
    """

    edges: tuple[Edge, ...]
    t: tuple[int, ...]
    m: tuple[int, ...]
    M: tuple[int, ...]
    mu: int
    delta: int
    _index: dict[Edge, int] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._index.update({e: i for i, e in enumerate(self.edges)})

    def index_of(self, u: int, v: int) -> int:
        e = canonical_edge(u, v)
        try:
            return self._index[e]
        except KeyError:
            raise GraphError(f"({u}, {v}) is not an edge of this table") from None

    def t_of(self, u: int, v: int) -> int:
        return self.t[self.index_of(u, v)]

    def __len__(self) -> int:
        return len(self.edges)


def count_edge_triangles(g: Graph) -> EdgeTriangleTable:
    """Exact t(e) for every edge via sorted-adjacency intersection."""
    ts: list[int] = []
    ms: list[int] = []
    bigs: list[int] = []
    for u, v in g.edges:
        ts.append(_intersection_size(g.adj[u], g.adj[v]))
        du = len(g.adj[u])
        dv = len(g.adj[v])
        ms.append(min(du, dv) - 1)
        bigs.append(max(du, dv) - 1)
    return EdgeTriangleTable(
        edges=g.edges,
        t=tuple(ts),
        m=tuple(ms),
        M=tuple(bigs),
        mu=max(ts, default=0),
        delta=g.max_degree(),
    )


def brute_force_triangles(g: Graph, max_nodes: int = 200) -> EdgeTriangleTable:
    """Oracle recount by enumerating every node triple.

    Same contract as count_edge_triangles but cubic in n; guarded so it is
    never run by accident on a large graph.
    """
    if g.n > max_nodes:
        raise GraphError(f"brute-force bound exceeded: n={g.n} > {max_nodes}")
    counts = {e: 0 for e in g.edges}
    for i, j, k in combinations(range(g.n), 3):
        if g.has_edge(i, j) and g.has_edge(i, k) and g.has_edge(j, k):
            counts[(i, j)] += 1
            counts[(i, k)] += 1
            counts[(j, k)] += 1
    ms: list[int] = []
    bigs: list[int] = []
    for u, v in g.edges:
        du = len(g.adj[u])
        dv = len(g.adj[v])
        ms.append(min(du, dv) - 1)
        bigs.append(max(du, dv) - 1)
    ts = tuple(counts[e] for e in g.edges)
    return EdgeTriangleTable(
        edges=g.edges,
        t=ts,
        m=tuple(ms),
        M=tuple(bigs),
        mu=max(ts, default=0),
        delta=g.max_degree(),
    )


def node_neighborhood_edges(g: Graph, table: EdgeTriangleTable) -> tuple[int, ...]:
    """Edges among each node's neighbors, one count per node.

    Computed as half the sum of t(e) over the edges incident to the node.
    The sum is always even; an odd sum means the table does not belong to
    this graph and raises InternalInvariantError.
    """
    sums = [0] * g.n
    for (u, v), t in zip(table.edges, table.t):
        sums[u] += t
        sums[v] += t
    for u, s in enumerate(sums):
        if s % 2:
            raise InternalInvariantError(f"odd incident triangle sum {s} at node {u}")
    return tuple(s // 2 for s in sums)


def triangle_total(table: EdgeTriangleTable) -> int:
    """Total number of triangles in the graph (each counted once)."""
    s = sum(table.t)
    if s % 3:
        raise InternalInvariantError(f"edge triangle counts sum to {s}, not divisible by 3")
    return s // 3


@dataclass(frozen=True)
class DirectedTriangleTable:
    """Transitive and cyclic triangle counts per arc.

    For arc (u, v): t_t counts mediators w with u->w and w->v; t_c counts
    w with v->w and w->u (closing a 3-cycle).
    """

    arcs: tuple[Edge, ...]
    t_t: tuple[int, ...]
    t_c: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.arcs)


def count_directed_triangles(d: DiGraph) -> DirectedTriangleTable:
    """Exact transitive/cyclic triangle counts for every arc."""
    tts: list[int] = []
    tcs: list[int] = []
    for u, v in d.arcs:
        # u->v is an arc, so v appears in out_adj[u] and u in in_adj[v];
        # neither can appear in the intersections (no loops).
        tts.append(_intersection_size(d.out_adj[u], d.in_adj[v]))
        tcs.append(_intersection_size(d.in_adj[u], d.out_adj[v]))
    return DirectedTriangleTable(arcs=d.arcs, t_t=tuple(tts), t_c=tuple(tcs))
