"""Shared helpers for the test suite: deterministic fleets and trial runners."""

from __future__ import annotations

from netdensity.generators import (
    SplitMix64,
    complete,
    cycle,
    path,
    random_graph,
    star,
    t_pattern,
)
from netdensity.graph import DiGraph, Graph, build_digraph, build_graph
from netdensity.triangles import count_edge_triangles, node_neighborhood_edges
from netdensity.measures import clustering_coefficient_corrected

FLEET_PS = (0.1, 0.3, 0.6)
FLEET_NS = (8, 15, 22, 30)


def random_fleet(count: int = 60, base_seed: int = 1000) -> list[Graph]:
    """Deterministic mixed-size random graphs for property tests."""
    out = []
    for i in range(count):
        n = FLEET_NS[i % len(FLEET_NS)]
        p = FLEET_PS[(i // len(FLEET_NS)) % len(FLEET_PS)]
        out.append(random_graph(n, p, seed=base_seed + i))
    return out


def constructed_families() -> list[Graph]:
    """Classical families that exercise the degenerate corners."""
    return [
        complete(1),
        complete(2),
        complete(3),
        complete(6),
        path(1),
        path(2),
        path(3),
        path(7),
        cycle(3),
        cycle(5),
        star(1),
        star(4),
        t_pattern(0, 0, 0),
        t_pattern(0, 1, 0),
        t_pattern(4, 5, 3),
        t_pattern(3, 0, 2),
    ]


def random_digraph(n: int, p: float, seed: int) -> DiGraph:
    """Each ordered pair (u, v), u != v, kept independently with probability p."""
    rng = SplitMix64(seed)
    arcs = []
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if rng.next_float() < p:
                arcs.append((u, v))
    return build_digraph(n, arcs)[0]


def random_tournament(n: int, seed: int) -> DiGraph:
    """Exactly one arc per unordered pair, direction chosen by the generator."""
    rng = SplitMix64(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            arcs.append((u, v) if rng.next_float() < 0.5 else (v, u))
    return build_digraph(n, arcs)[0]


def _pick(rng: SplitMix64, items):
    return items[rng.next_u64() % len(items)]


def _corrected_overlap_at_mu(g: Graph, u: int, v: int, mu: int) -> float:
    tri = count_edge_triangles(g)
    i = tri.index_of(u, v)
    t, big = tri.t[i], tri.M[i]
    return 0.0 if t == 0 else t / (mu + big - t)


def overlap_growth_trials(trials_per_case: int = 100, seed: int = 99) -> dict[str, int]:
    """Randomized edge-addition trials for the corrected overlap weight.

    For a random edge (u, v) with deg(u) >= deg(v), three additions to the
    edge's neighborhood are exercised, with the graph-wide triangle
    maximum pinned to its post-addition value for both evaluations (a new
    edge elsewhere can raise that maximum and legitimately lower every
    corrected value):

    * larger_endpoint: u gains a neighbor of v, creating a triangle on
      (u, v); the value must strictly increase.
    * smaller_endpoint: v gains a neighbor of u; strict increase again.
    * between_neighbors: two non-adjacent nodes of the neighborhood ring
      get joined; the value must not move.
    * existing_edge: re-adding (u, v) collapses to the identical graph.

    Raises AssertionError on any violation. Returns the per-case counts,
    each at least trials_per_case (the driver keeps sampling until all
    cases hit the quota).
    """
    rng = SplitMix64(seed)
    counts = {
        "larger_endpoint": 0,
        "smaller_endpoint": 0,
        "between_neighbors": 0,
        "existing_edge": 0,
    }
    attempts = 0
    while min(counts.values()) < trials_per_case and attempts < 6000:
        attempts += 1
        g = random_graph(14, 0.3, seed=5000 + rng.next_u64() % 100_000)
        if not g.edges:
            continue
        u, v = _pick(rng, g.edges)
        if g.degree(u) < g.degree(v):
            u, v = v, u
        if counts["larger_endpoint"] < trials_per_case:
            candidates = [w for w in g.adj[v] if w != u and not g.has_edge(u, w)]
            if candidates:
                w = _pick(rng, candidates)
                bigger, _ = build_graph(g.n, list(g.edges) + [(u, w)])
                mu = count_edge_triangles(bigger).mu
                assert _corrected_overlap_at_mu(bigger, u, v, mu) > _corrected_overlap_at_mu(
                    g, u, v, mu
                )
                counts["larger_endpoint"] += 1
        if counts["smaller_endpoint"] < trials_per_case:
            candidates = [w for w in g.adj[u] if w != v and not g.has_edge(v, w)]
            if candidates:
                w = _pick(rng, candidates)
                bigger, _ = build_graph(g.n, list(g.edges) + [(v, w)])
                mu = count_edge_triangles(bigger).mu
                assert _corrected_overlap_at_mu(bigger, u, v, mu) > _corrected_overlap_at_mu(
                    g, u, v, mu
                )
                counts["smaller_endpoint"] += 1
        if counts["between_neighbors"] < trials_per_case:
            ring = sorted((set(g.adj[u]) | set(g.adj[v])) - {u, v})
            pairs = [(x, y) for xi, x in enumerate(ring) for y in ring[xi + 1:] if not g.has_edge(x, y)]
            if pairs:
                x, y = _pick(rng, pairs)
                bigger, _ = build_graph(g.n, list(g.edges) + [(x, y)])
                mu = count_edge_triangles(bigger).mu
                assert _corrected_overlap_at_mu(bigger, u, v, mu) == _corrected_overlap_at_mu(
                    g, u, v, mu
                )
                counts["between_neighbors"] += 1
        if counts["existing_edge"] < trials_per_case:
            rebuilt, report = build_graph(g.n, list(g.edges) + [(u, v)])
            assert report.duplicates_dropped == 1
            assert rebuilt.edges == g.edges
            counts["existing_edge"] += 1
    return counts


def cc_fill_trials(trials: int = 100, seed: int = 777) -> int:
    """Randomized trials: joining two neighbors of a node strictly raises
    its corrected clustering coefficient (triangle maximum pinned to the
    post-addition value). Returns the number of completed trials."""
    rng = SplitMix64(seed)
    done = 0
    attempts = 0
    while done < trials and attempts < 4000:
        attempts += 1
        g = random_graph(14, 0.3, seed=6000 + rng.next_u64() % 100_000)
        candidates = [u for u in range(g.n) if g.degree(u) >= 2]
        if not candidates:
            continue
        u = _pick(rng, candidates)
        nb = g.adj[u]
        pairs = [(x, y) for xi, x in enumerate(nb) for y in nb[xi + 1:] if not g.has_edge(x, y)]
        if not pairs:
            continue
        x, y = _pick(rng, pairs)
        bigger, _ = build_graph(g.n, list(g.edges) + [(x, y)])
        mu = count_edge_triangles(bigger).mu
        values = []
        for graph in (g, bigger):
            tri = count_edge_triangles(graph)
            e_counts = node_neighborhood_edges(graph, tri)
            values.append(clustering_coefficient_corrected(graph, e_counts, mu).values[u])
        assert values[1] > values[0]
        done += 1
    return done
