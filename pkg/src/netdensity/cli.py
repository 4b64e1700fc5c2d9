"""Command line front end: stats, measure, cut, top, scatter, gen.

Exit codes: 0 on success, 2 for usage or input errors, 3 if an internal
invariant check fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import analysis, measures, pajek
from .generators import GenSpec, make
from .graph import DiGraph, Graph, GraphError
from .triangles import (
    InternalInvariantError,
    count_directed_triangles,
    count_edge_triangles,
    node_neighborhood_edges,
    triangle_total,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3

EDGE_AXES = measures.EDGE_MEASURES + ("minDeg",)
NODE_AXES = measures.NODE_MEASURES + ("deg",)


def _write_out(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _load_undirected(path: str) -> tuple[Graph, pajek.ParseDiagnostics]:
    net, diag = pajek.read_net(path)
    if isinstance(net, DiGraph):
        raise GraphError(f"{path} is a directed network; this command needs an undirected one")
    return net, diag


def cmd_stats(args) -> int:
    net, diag = pajek.read_net(args.input)
    print(f"nodes: {net.n}")
    if isinstance(net, DiGraph):
        print(f"arcs: {len(net.arcs)}")
        print(f"max outdegree: {max((net.outdeg(u) for u in range(net.n)), default=0)}")
        print(f"max indegree: {max((net.indeg(u) for u in range(net.n)), default=0)}")
        dtri = count_directed_triangles(net)
        print(f"max transitive triangles on an arc: {max(dtri.t_t, default=0)}")
        print(f"max cyclic triangles on an arc: {max(dtri.t_c, default=0)}")
        degs = sorted(range(net.n), key=lambda u: (-net.outdeg(u), u))[:5]
        print("top outdegrees:")
        for u in degs:
            print(f"  {net.outdeg(u):>5}  {net.label(u)}")
    else:
        tri = count_edge_triangles(net)
        print(f"edges: {len(net.edges)}")
        print(f"max degree: {tri.delta}")
        print(f"max edge triangles: {tri.mu}")
        print(f"triangles: {triangle_total(tri)}")
        degs = sorted(range(net.n), key=lambda u: (-len(net.adj[u]), u))[:5]
        print("top degrees:")
        for u in degs:
            print(f"  {len(net.adj[u]):>5}  {net.label(u)}")
    print(
        "normalized input: "
        f"{diag.loops_dropped} loops dropped, "
        f"{diag.duplicates_dropped} duplicates dropped, "
        f"{diag.weights_discarded} weights ignored"
    )
    return EXIT_OK


def _measure_ids(raw: str, valid: tuple[str, ...], what: str) -> list[str]:
    ids = [tok.strip() for tok in raw.split(",") if tok.strip()]
    if not ids:
        raise GraphError(f"no {what} measures given")
    for mid in ids:
        if mid not in valid:
            raise GraphError(f"unknown {what} measure {mid!r}; valid: " + ", ".join(valid))
    return ids


def cmd_measure(args) -> int:
    net, _ = pajek.read_net(args.input)
    if args.edge is not None and args.node is not None:
        raise GraphError("choose either --edge or --node, not both")
    if args.edge is None and args.node is None:
        raise GraphError("one of --edge or --node is required")
    if isinstance(net, DiGraph):
        if args.node is not None:
            raise GraphError("node measures are only defined for undirected networks")
        if args.vec:
            raise GraphError("--vec applies to node measures on undirected networks")
        ids = _measure_ids(args.edge, measures.ARC_MEASURES, "arc")
        dtri = count_directed_triangles(net)
        tables = [measures.compute_directed(net, mid, dtri) for mid in ids]
        _write_out(pajek.write_csv(net, tables, dtri), args.output)
        return EXIT_OK
    tri = count_edge_triangles(net)
    if args.edge is not None:
        ids = _measure_ids(args.edge, measures.EDGE_MEASURES, "edge")
        tables = [measures.compute(net, mid, tri) for mid in ids]
        if args.vec:
            raise GraphError("--vec applies to node measures, not edge measures")
    else:
        ids = _measure_ids(args.node, measures.NODE_MEASURES, "node")
        e_counts = node_neighborhood_edges(net, tri)
        tables = [measures.compute(net, mid, tri, e_counts) for mid in ids]
        if args.vec:
            if len(tables) != 1:
                raise GraphError("--vec needs exactly one node measure")
            Path(args.vec).write_text(
                pajek.write_vec(tables[0].values, net.n), encoding="utf-8"
            )
    _write_out(pajek.write_csv(net, tables, tri), args.output)
    return EXIT_OK


def cmd_cut(args) -> int:
    net, _ = _load_undirected(args.input)
    if args.measure not in measures.EDGE_MEASURES:
        raise GraphError(
            f"unknown edge measure {args.measure!r}; valid: " + ", ".join(measures.EDGE_MEASURES)
        )
    tri = count_edge_triangles(net)
    table = measures.compute(net, args.measure, tri)
    cut = analysis.edge_cut(net, table, args.level)
    print(f"cut: {args.measure} >= {args.level:g}")
    print(f"retained: {len(cut.nodes)} nodes, {len(cut.edges)} edges")
    print(f"components: {len(cut.components)} ({analysis.census_text(cut)})")
    if args.output:
        sub, _ = analysis.cut_network(net, cut)
        Path(args.output).write_text(pajek.write_net(sub), encoding="utf-8")
    return EXIT_OK


def cmd_top(args) -> int:
    net, _ = pajek.read_net(args.input)
    if isinstance(net, DiGraph):
        if args.measure not in measures.ARC_MEASURES:
            raise GraphError(
                f"unknown directed measure {args.measure!r}; valid: "
                + ", ".join(measures.ARC_MEASURES)
            )
        table = measures.compute_directed(net, args.measure)
        rows = analysis.top_k(net, table, args.k)
        for row in rows:
            print(
                f"{row.rank:>4}  {row.value:.5f}  t={row.aux:<4d} "
                f"outdeg/indeg={row.degrees[0]}/{row.degrees[1]}  "
                f"{row.labels[0]} -> {row.labels[1]}"
            )
        return EXIT_OK
    valid = measures.EDGE_MEASURES + measures.NODE_MEASURES
    if args.measure not in valid:
        raise GraphError(f"unknown measure {args.measure!r}; valid: " + ", ".join(valid))
    tri = count_edge_triangles(net)
    table = measures.compute(net, args.measure, tri)
    rows = analysis.top_k(net, table, args.k, tri=tri)
    for row in rows:
        if table.kind == "edge":
            print(
                f"{row.rank:>4}  {row.value:.5f}  t={row.aux:<4d} "
                f"deg={row.degrees[0]}/{row.degrees[1]}  "
                f"{row.labels[0]} -- {row.labels[1]}"
            )
        else:
            print(
                f"{row.rank:>4}  {row.value:.5f}  deg={row.degrees[0]:<4d} "
                f"E={row.aux:<5d} {row.labels[0]}"
            )
    return EXIT_OK


def _axis_table(net: Graph, token: str, tri) -> measures.MeasureTable:
    if token == "deg":
        values = tuple(float(len(net.adj[u])) for u in range(net.n))
        return measures.MeasureTable("node", "deg", tuple(range(net.n)), values, n=net.n)
    if token == "minDeg":
        values = tuple(float(m) for m in tri.m)
        return measures.MeasureTable(
            "edge", "minDeg", tri.edges, values, n=net.n, mu=tri.mu, delta=tri.delta
        )
    return measures.compute(net, token, tri)


def cmd_scatter(args) -> int:
    net, _ = _load_undirected(args.input)
    valid = EDGE_AXES + NODE_AXES
    for token in (args.x, args.y):
        if token not in valid:
            raise GraphError(f"unknown axis {token!r}; valid: " + ", ".join(valid))
    tri = count_edge_triangles(net)
    tx = _axis_table(net, args.x, tri)
    ty = _axis_table(net, args.y, tri)
    data = analysis.scatter(tx, ty)
    _write_out(pajek.write_scatter_csv(data), args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        params = tuple(float(x) for x in args.params)
    except ValueError as exc:
        raise GraphError(f"family parameters must be numeric: {exc}") from None
    g = make(GenSpec(args.family, params, seed=args.seed))
    _write_out(pajek.write_net(g), args.output)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netdensity",
        description="Triangle-based local density measures on Pajek networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="basic network statistics")
    p.add_argument("input", help="Pajek .net file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("measure", help="export measure tables as CSV (and .vec)")
    p.add_argument("input")
    p.add_argument("--edge", help="comma-separated edge measures: " + ",".join(measures.EDGE_MEASURES))
    p.add_argument("--node", help="comma-separated node measures: " + ",".join(measures.NODE_MEASURES))
    p.add_argument("-o", "--output", help="CSV output path (default: stdout)")
    p.add_argument("--vec", help="also write a Pajek .vec file (single node measure)")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("cut", help="threshold cut with a component census")
    p.add_argument("input")
    p.add_argument("--measure", required=True, help="edge measure id")
    p.add_argument("--level", required=True, type=float, help="inclusive threshold")
    p.add_argument("-o", "--output", help="write the cut subnetwork as .net")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("top", help="largest measure values")
    p.add_argument("input")
    p.add_argument("--measure", required=True)
    p.add_argument("-k", type=int, default=10)
    p.set_defaults(func=cmd_top)

    p = sub.add_parser("scatter", help="paired values of two measures as CSV")
    p.add_argument("input")
    p.add_argument("-x", required=True, help="x axis: measure id, deg, or minDeg")
    p.add_argument("-y", required=True, help="y axis: measure id, deg, or minDeg")
    p.add_argument("-o", "--output", help="CSV output path (default: stdout)")
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("gen", help="generate a graph family as .net")
    p.add_argument("family", help="complete | path | cycle | star | T | er")
    p.add_argument("params", nargs="*", help="family parameters, e.g. 'T 4 5 3' or 'er 30 0.2'")
    p.add_argument("--seed", type=int, default=0, help="seed for random families")
    p.add_argument("-o", "--output", help=".net output path (default: stdout)")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except pajek.NetParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
