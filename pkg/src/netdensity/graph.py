"""Immutable simple-graph containers used by every other module.

Node ids are 0-based contiguous integers; 1-based id schemes (Pajek files)
are remapped at the I/O boundary. Graphs never change after construction,
so every query is pure and instances are safe to share across threads.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid node id, edge reference, or construction input."""


def canonical_edge(u: int, v: int) -> Edge:
    """The unordered pair (u, v) with the smaller id first."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class BuildReport:
    """What input normalization dropped while building a graph."""

    loops_dropped: int = 0
    duplicates_dropped: int = 0


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: no loops, no parallel edges.

    Use :func:`build_graph` rather than the raw constructor; it normalizes
    arbitrary edge-pair input and guarantees the invariants (strictly
    ascending adjacency lists, canonical sorted edge list, symmetry).
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None

    def check_node(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise GraphError(f"node id {u} out of range for n={self.n}")

    def degree(self, u: int) -> int:
        self.check_node(u)
        return len(self.adj[u])

    def max_degree(self) -> int:
        """Largest degree in the graph; 0 for an edgeless graph."""
        return max((len(a) for a in self.adj), default=0)

    def neighbors(self, u: int) -> tuple[int, ...]:
        self.check_node(u)
        return self.adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        self.check_node(u)
        self.check_node(v)
        if u == v:
            return False
        if len(self.adj[u]) > len(self.adj[v]):
            u, v = v, u
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def label(self, u: int) -> str:
        """Node label, falling back to the 1-based default "v<id>"."""
        self.check_node(u)
        if self.labels is not None:
            return self.labels[u]
        return f"v{u + 1}"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def induced_subgraph(self, nodes: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Subgraph on the given node set.

        Returns (subgraph, mapping) where mapping[new_id] is the original
        node id; labels are carried over. A pair is adjacent in the result
        exactly when both endpoints are in the set and adjacent here.
        """
        ids = sorted(set(nodes))
        for u in ids:
            self.check_node(u)
        index = {orig: new for new, orig in enumerate(ids)}
        keep = []
        for u, v in self.edges:
            if u in index and v in index:
                keep.append((index[u], index[v]))
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[u] for u in ids)
        sub, _ = build_graph(len(ids), keep, labels)
        return sub, tuple(ids)

    def edge_neighborhood(self, u: int, v: int) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on both endpoints and all of their neighbors."""
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        nodes = {u, v}
        nodes.update(self.adj[u])
        nodes.update(self.adj[v])
        return self.induced_subgraph(nodes)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def build_graph(
    n: int,
    edge_pairs: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> tuple[Graph, BuildReport]:
    """Normalize raw edge pairs into a Graph.

    Pairs may be unordered, duplicated, or contain loops; loops are dropped
    and duplicates collapsed, both counted in the returned BuildReport
    rather than treated as errors (real network files contain both). A node
    id outside [0, n) raises GraphError naming the offending pair.
    """
    if n < 0:
        raise GraphError(f"node count must be >= 0, got {n}")
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
    loops = 0
    dups = 0
    seen: set[Edge] = set()
    for u, v in edge_pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) references a node id outside [0, {n})")
        if u == v:
            loops += 1
            continue
        e = canonical_edge(u, v)
        if e in seen:
            dups += 1
        else:
            seen.add(e)
    edges = tuple(sorted(seen))
    lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        lists[u].append(v)
        lists[v].append(u)
    adj = tuple(tuple(sorted(a)) for a in lists)
    return Graph(n, adj, edges, labels), BuildReport(loops, dups)


@dataclass(frozen=True)
class DiGraph:
    """Directed simple graph: no loops, no duplicate arcs.

    Opposite arcs (u, v) and (v, u) may coexist. Built via
    :func:`build_digraph`, which keeps in/out adjacency mutually consistent
    and sorted.
    """

    n: int
    out_adj: tuple[tuple[int, ...], ...]
    in_adj: tuple[tuple[int, ...], ...]
    arcs: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None

    def check_node(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise GraphError(f"node id {u} out of range for n={self.n}")

    def outdeg(self, u: int) -> int:
        self.check_node(u)
        return len(self.out_adj[u])

    def indeg(self, u: int) -> int:
        self.check_node(u)
        return len(self.in_adj[u])

    def out_neighbors(self, u: int) -> tuple[int, ...]:
        self.check_node(u)
        return self.out_adj[u]

    def in_neighbors(self, u: int) -> tuple[int, ...]:
        self.check_node(u)
        return self.in_adj[u]

    def has_arc(self, u: int, v: int) -> bool:
        self.check_node(u)
        self.check_node(v)
        a = self.out_adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def label(self, u: int) -> str:
        self.check_node(u)
        if self.labels is not None:
            return self.labels[u]
        return f"v{u + 1}"

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def __repr__(self) -> str:
        return f"DiGraph(n={self.n}, arcs={len(self.arcs)})"


def build_digraph(
    n: int,
    arc_pairs: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> tuple[DiGraph, BuildReport]:
    """Normalize ordered pairs into a DiGraph; loops and duplicates drop."""
    if n < 0:
        raise GraphError(f"node count must be >= 0, got {n}")
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
    loops = 0
    dups = 0
    seen: set[Edge] = set()
    for u, v in arc_pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"arc ({u}, {v}) references a node id outside [0, {n})")
        if u == v:
            loops += 1
            continue
        if (u, v) in seen:
            dups += 1
        else:
            seen.add((u, v))
    arcs = tuple(sorted(seen))
    outs: list[list[int]] = [[] for _ in range(n)]
    ins: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        outs[u].append(v)
        ins[v].append(u)
    out_adj = tuple(tuple(sorted(a)) for a in outs)
    in_adj = tuple(tuple(sorted(a)) for a in ins)
    return DiGraph(n, out_adj, in_adj, arcs, labels), BuildReport(loops, dups)
