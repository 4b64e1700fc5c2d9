"""Threshold cuts, rankings, value counting, and paired-measure exports."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable

from .graph import DiGraph, Edge, Graph, GraphError, build_graph
from .measures import MeasureTable
from .triangles import (
    count_directed_triangles,
    count_edge_triangles,
    node_neighborhood_edges,
)

COMPONENT_KINDS = ("triangle", "clique", "cycle", "path", "isolated_edge", "other")


@dataclass(frozen=True)
class Component:
    """One connected component of a cut, classified by shape."""

    kind: str
    nodes: tuple[int, ...]
    edge_count: int

    @property
    def size(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class CutResult:
    """Edges at or above a threshold plus the census of what they form."""

    measure_id: str
    level: float
    edges: tuple[Edge, ...]
    nodes: tuple[int, ...]
    components: tuple[Component, ...]

    def census(self) -> Counter:
        return Counter(c.kind for c in self.components)


def _classify(n: int, m: int, degrees: list[int]) -> str:
    # Exhaustive and mutually exclusive; a 3-cycle is a triangle, never a
    # cycle or clique, and a 2-node component is always an isolated edge.
    if n == 2:
        return "isolated_edge"
    if n == 3 and m == 3:
        return "triangle"
    if m == n - 1 and max(degrees) <= 2:
        return "path"
    if m == n and all(d == 2 for d in degrees):
        return "cycle"
    if m == n * (n - 1) // 2:
        return "clique"
    return "other"


def edge_cut(g: Graph, table: MeasureTable, level: float) -> CutResult:
    """Subnetwork of edges whose value is at least level (inclusive).

    Nodes touching no retained edge are dropped; components are listed in
    ascending order of their smallest node id.
    """
    if table.kind != "edge":
        raise GraphError("edge_cut needs an edge-keyed measure table")
    if table.keys != g.edges:
        raise GraphError("measure table does not match the graph's edge list")
    retained = tuple(e for e, val in zip(table.keys, table.values) if val >= level)
    adj: dict[int, list[int]] = {}
    for u, v in retained:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    nodes = tuple(sorted(adj))
    comps: list[Component] = []
    visited: set[int] = set()
    for start in nodes:
        if start in visited:
            continue
        stack = [start]
        members: list[int] = []
        visited.add(start)
        while stack:
            u = stack.pop()
            members.append(u)
            for w in adj[u]:
                if w not in visited:
                    visited.add(w)
                    stack.append(w)
        members.sort()
        degrees = [len(adj[u]) for u in members]
        m = sum(degrees) // 2
        comps.append(Component(_classify(len(members), m, degrees), tuple(members), m))
    return CutResult(table.measure_id, level, retained, nodes, tuple(comps))


def cut_network(g: Graph, cut: CutResult) -> tuple[Graph, tuple[int, ...]]:
    """The cut as a standalone Graph (retained edges only), with id mapping."""
    index = {orig: new for new, orig in enumerate(cut.nodes)}
    edges = [(index[u], index[v]) for u, v in cut.edges]
    labels = tuple(g.label(u) for u in cut.nodes)
    sub, _ = build_graph(len(cut.nodes), edges, labels)
    return sub, cut.nodes


def census_text(cut: CutResult) -> str:
    """Human-readable component census, e.g. "2 triangles, 17 isolated edges"."""
    if not cut.components:
        return "empty"
    parts: list[str] = []
    by_kind: dict[str, list[Component]] = {}
    for comp in cut.components:
        by_kind.setdefault(comp.kind, []).append(comp)
    if "triangle" in by_kind:
        k = len(by_kind["triangle"])
        parts.append(f"{k} triangle" + ("s" if k != 1 else ""))
    if "clique" in by_kind:
        for size, count in sorted(Counter(c.size for c in by_kind["clique"]).items()):
            parts.append(f"{count} clique" + ("s" if count != 1 else "") + f" of size {size}")
    if "cycle" in by_kind:
        for size, count in sorted(Counter(c.size for c in by_kind["cycle"]).items()):
            parts.append(f"{count} cycle" + ("s" if count != 1 else "") + f" of length {size}")
    if "path" in by_kind:
        for length, count in sorted(Counter(c.edge_count for c in by_kind["path"]).items()):
            parts.append(f"{count} path" + ("s" if count != 1 else "") + f" of length {length}")
    if "isolated_edge" in by_kind:
        k = len(by_kind["isolated_edge"])
        parts.append(f"{k} isolated edge" + ("s" if k != 1 else ""))
    if "other" in by_kind:
        for comp in sorted(by_kind["other"], key=lambda c: c.nodes):
            parts.append(f"1 other component ({comp.size} nodes, {comp.edge_count} edges)")
    return ", ".join(parts)


@dataclass(frozen=True)
class RankedRow:
    """One row of a top-k report.

    aux is the edge's triangle count for edge rows, the node's
    neighborhood edge count for node rows, and the relevant directed
    triangle count for arc rows.
    """

    rank: int
    key: int | Edge
    value: float
    labels: tuple[str, ...]
    degrees: tuple[int, ...]
    aux: int


def top_k(
    net: Graph | DiGraph,
    table: MeasureTable,
    k: int,
    tri=None,
    e_counts=None,
) -> tuple[RankedRow, ...]:
    """The k largest values, ties broken by ascending node/edge id.

    The order is a stable total order: growing k never reorders earlier
    rows. Rows carry the labels, degrees, and triangle statistics needed
    for reporting.
    """
    if k < 0:
        raise GraphError(f"k must be >= 0, got {k}")
    order = sorted(range(len(table.keys)), key=lambda i: (-table.values[i], table.keys[i]))
    chosen = order[: min(k, len(order))]
    if table.kind == "edge":
        if tri is None:
            tri = count_edge_triangles(net)
    elif table.kind == "node":
        if e_counts is None:
            if tri is None:
                tri = count_edge_triangles(net)
            e_counts = node_neighborhood_edges(net, tri)
    else:
        if tri is None:
            tri = count_directed_triangles(net)
    rows: list[RankedRow] = []
    for rank, i in enumerate(chosen, start=1):
        key = table.keys[i]
        value = table.values[i]
        if table.kind == "edge":
            u, v = key
            rows.append(
                RankedRow(
                    rank,
                    key,
                    value,
                    (net.label(u), net.label(v)),
                    (len(net.adj[u]), len(net.adj[v])),
                    tri.t[tri.index_of(u, v)],
                )
            )
        elif table.kind == "node":
            rows.append(
                RankedRow(
                    rank,
                    key,
                    value,
                    (net.label(key),),
                    (len(net.adj[key]),),
                    e_counts[key],
                )
            )
        else:
            u, v = key
            aux = tri.t_t[i] if table.measure_id == "overlap_transitive" else tri.t_c[i]
            rows.append(
                RankedRow(
                    rank,
                    key,
                    value,
                    (net.label(u), net.label(v)),
                    (net.outdeg(u), net.indeg(v)),
                    aux,
                )
            )
    return tuple(rows)


def count_value(
    g: Graph,
    table: MeasureTable,
    value: float,
    degree_filter: Callable[[int], bool] | None = None,
    tol: float = 1e-9,
) -> int:
    """How many elements sit exactly at a value (within tol).

    degree_filter, when given, receives the node degree for node tables
    and the smaller endpoint degree for edge tables.
    """
    count = 0
    for key, val in table.items():
        if abs(val - value) > tol:
            continue
        if degree_filter is not None:
            if table.kind == "node":
                d = len(g.adj[key])
            else:
                d = min(len(g.adj[key[0]]), len(g.adj[key[1]]))
            if not degree_filter(d):
                continue
        count += 1
    return count


@dataclass(frozen=True)
class ScatterData:
    """Paired values of two measures over a shared key domain."""

    x_id: str
    y_id: str
    keys: tuple
    xs: tuple[float, ...]
    ys: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.keys)


def scatter(table_x: MeasureTable, table_y: MeasureTable) -> ScatterData:
    """Pair two tables element-wise; they must cover the same elements."""
    if table_x.kind != table_y.kind or table_x.keys != table_y.keys:
        raise GraphError(
            f"cannot pair {table_x.measure_id!r} ({table_x.kind}) with "
            f"{table_y.measure_id!r} ({table_y.kind}): key domains differ"
        )
    return ScatterData(
        table_x.measure_id, table_y.measure_id, table_x.keys, table_x.values, table_y.values
    )


def degree_pairs(g: Graph, node_table: MeasureTable) -> ScatterData:
    """(degree, value) pairs for a node measure."""
    if node_table.kind != "node":
        raise GraphError("degree_pairs needs a node-keyed measure table")
    xs = tuple(float(len(g.adj[u])) for u in node_table.keys)
    return ScatterData("deg", node_table.measure_id, node_table.keys, xs, node_table.values)
