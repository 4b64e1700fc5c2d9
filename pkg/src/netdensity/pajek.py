"""Pajek .net parsing/writing plus .vec and CSV exports.

The accepted .net dialect (full grammar in docs/formats.md):

* ``*Vertices n`` header, then optional vertex lines ``id "label" [x y z]``
  (ids are 1-based; unlisted vertices get the default label ``v<id>``);
* ``*Edges`` and/or ``*Arcs`` sections with records ``u v [w]``; a trailing
  weight is parsed and discarded, counted in the diagnostics;
* ``%`` comment lines and blank lines anywhere; CR/LF line endings;
  section keywords are case-insensitive;
* an unknown ``*section`` terminates network parsing without error
  (project files concatenate several objects).

A file whose records are all edges parses to a Graph; arc records make it
a DiGraph, with any edge records expanded to two opposite arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .graph import BuildReport, DiGraph, Graph, build_digraph, build_graph
from .triangles import (
    DirectedTriangleTable,
    EdgeTriangleTable,
    count_directed_triangles,
    count_edge_triangles,
    node_neighborhood_edges,
)


class NetParseError(ValueError):
    """Malformed .net input; carries the 1-based line number when known."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class ParseDiagnostics:
    """Input normalization surfaced by the parser, never errors."""

    weights_discarded: int = 0
    loops_dropped: int = 0
    duplicates_dropped: int = 0


def _is_number(token: str) -> bool:
    try:
        float(token)
        return True
    except ValueError:
        return False


def _split_vertex_line(line: str, line_no: int) -> tuple[int, str | None]:
    """Vertex record: id, optional label (quoted or a single bare token)."""
    stripped = line.strip()
    parts = stripped.split(None, 1)
    try:
        vid = int(parts[0])
    except ValueError:
        raise NetParseError(f"vertex id is not an integer: {parts[0]!r}", line_no) from None
    if len(parts) == 1:
        return vid, None
    rest = parts[1].lstrip()
    if rest.startswith('"'):
        end = rest.find('"', 1)
        if end < 0:
            raise NetParseError("unterminated quoted label", line_no)
        return vid, rest[1:end]
    token = rest.split(None, 1)[0]
    if _is_number(token):
        # no label, coordinates follow
        return vid, None
    return vid, token


def parse_net(text: str) -> tuple[Graph | DiGraph, ParseDiagnostics]:
    """Parse .net text into a Graph or DiGraph plus diagnostics.

    Raises NetParseError with a line number for a missing ``*Vertices``
    header, ids out of range, or records that cannot be tokenized.
    """
    n: int | None = None
    labels: dict[int, str] = {}
    edge_records: list[tuple[int, int]] = []
    arc_records: list[tuple[int, int]] = []
    weights = 0
    saw_edges_section = False
    saw_arcs_section = False
    section: str | None = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            keyword = line.split(None, 1)[0].lower()
            if keyword == "*vertices":
                tokens = line.split()
                if len(tokens) != 2:
                    raise NetParseError(
                        "expected '*Vertices n' (two-mode headers are unsupported)", line_no
                    )
                try:
                    n = int(tokens[1])
                except ValueError:
                    raise NetParseError(
                        f"vertex count is not an integer: {tokens[1]!r}", line_no
                    ) from None
                if n < 0:
                    raise NetParseError(f"negative vertex count {n}", line_no)
                section = "vertices"
            elif keyword in ("*edges", "*arcs"):
                if n is None:
                    raise NetParseError(f"{keyword} section before *Vertices header", line_no)
                section = keyword[1:]
                if section == "edges":
                    saw_edges_section = True
                else:
                    saw_arcs_section = True
            else:
                break  # start of some other Pajek object
            continue
        if n is None:
            raise NetParseError("record before *Vertices header", line_no)
        if section == "vertices":
            vid, label = _split_vertex_line(line, line_no)
            if not 1 <= vid <= n:
                raise NetParseError(f"vertex id {vid} outside [1, {n}]", line_no)
            if label is not None:
                labels[vid - 1] = label
        else:
            tokens = line.split()
            if len(tokens) < 2:
                raise NetParseError(f"expected 'u v [w]', got {line!r}", line_no)
            try:
                u = int(tokens[0])
                v = int(tokens[1])
            except ValueError:
                raise NetParseError(f"endpoint is not an integer in {line!r}", line_no) from None
            for w, name in ((u, tokens[0]), (v, tokens[1])):
                if not 1 <= w <= n:
                    raise NetParseError(f"endpoint {name} outside [1, {n}]", line_no)
            if len(tokens) > 2 and _is_number(tokens[2]):
                weights += 1
            if section == "edges":
                edge_records.append((u - 1, v - 1))
            else:
                arc_records.append((u - 1, v - 1))

    if n is None:
        raise NetParseError("missing *Vertices header")

    full_labels = tuple(labels.get(i, f"v{i + 1}") for i in range(n))
    directed = bool(arc_records) or (saw_arcs_section and not saw_edges_section)
    report: BuildReport
    if directed:
        pairs = list(arc_records)
        for u, v in edge_records:
            pairs.append((u, v))
            pairs.append((v, u))
        net, report = build_digraph(n, pairs, full_labels)
    else:
        net, report = build_graph(n, edge_records, full_labels)
    diag = ParseDiagnostics(
        weights_discarded=weights,
        loops_dropped=report.loops_dropped,
        duplicates_dropped=report.duplicates_dropped,
    )
    return net, diag


def read_net(path: str | Path) -> tuple[Graph | DiGraph, ParseDiagnostics]:
    """parse_net over a file, decoding UTF-8 with a Latin-1 fallback."""
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        text = raw.decode("latin-1")
    return parse_net(text)


def _safe_label(label: str) -> str:
    # Pajek quoting has no escape convention; embedded quotes are demoted.
    return label.replace('"', "'")


def write_net(net: Graph | DiGraph) -> str:
    """Render a network as .net text; parse_net(write_net(g)) == g.

    Graphs with labels=None are written with the default labels, which is
    also what parsing produces for label-less files.
    """
    lines = [f"*Vertices {net.n}"]
    for u in range(net.n):
        lines.append(f'{u + 1} "{_safe_label(net.label(u))}"')
    if isinstance(net, DiGraph):
        lines.append("*Arcs")
        for u, v in net.arcs:
            lines.append(f"{u + 1} {v + 1}")
    elif net.edges:
        lines.append("*Edges")
        for u, v in net.edges:
            lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def _vec_number(value: float) -> str:
    f = float(value)
    if f.is_integer():
        return str(int(f))
    return repr(f)  # shortest round-trip form


def write_vec(values: Sequence[float], n: int | None = None) -> str:
    """Pajek vector text: header plus one value per node in node order."""
    vals = list(values)
    if n is not None and len(vals) != n:
        raise ValueError(f"expected {n} values, got {len(vals)}")
    lines = [f"*Vertices {len(vals)}"]
    lines.extend(_vec_number(v) for v in vals)
    return "\n".join(lines) + "\n"


def _q(label: str) -> str:
    return '"' + label.replace('"', '""') + '"'


def _f5(value: float) -> str:
    return f"{value:.5f}"


def write_csv(net, tables, tri=None) -> str:
    """Render measure tables (or a triangle table) as CSV text.

    Edge rows carry u, v, t, m, M then one column per measure; node rows
    carry node, deg, E; arc rows carry u, v, t_t, t_c. Labels are quoted,
    measure values use 5 decimals, lines end with LF.

    ``tables`` is a single table or a sequence of MeasureTables sharing
    kind and keys; a bare EdgeTriangleTable or DirectedTriangleTable is
    also accepted. ``tri`` supplies precomputed triangle statistics and is
    recomputed when absent.
    """
    if isinstance(tables, (EdgeTriangleTable, DirectedTriangleTable)):
        return _triangle_csv(net, tables)
    if not isinstance(tables, (list, tuple)):
        tables = [tables]
    if not tables:
        raise ValueError("no tables to write")
    kind = tables[0].kind
    keys = tables[0].keys
    for t in tables[1:]:
        if t.kind != kind or t.keys != keys:
            raise ValueError("tables must share kind and key order")
    ids = [t.measure_id for t in tables]
    out: list[str] = []
    if kind == "edge":
        if not isinstance(tri, EdgeTriangleTable):
            tri = count_edge_triangles(net)
        if keys != tri.edges:
            raise ValueError("measure keys do not match the graph's edges")
        out.append(",".join(["u", "v", "t", "m", "M"] + ids))
        for i, (u, v) in enumerate(keys):
            row = [_q(net.label(u)), _q(net.label(v)), str(tri.t[i]), str(tri.m[i]), str(tri.M[i])]
            row.extend(_f5(t.values[i]) for t in tables)
            out.append(",".join(row))
    elif kind == "node":
        if not isinstance(tri, EdgeTriangleTable):
            tri = count_edge_triangles(net)
        e_counts = node_neighborhood_edges(net, tri)
        out.append(",".join(["node", "deg", "E"] + ids))
        for i, u in enumerate(keys):
            row = [_q(net.label(u)), str(len(net.adj[u])), str(e_counts[u])]
            row.extend(_f5(t.values[i]) for t in tables)
            out.append(",".join(row))
    elif kind == "arc":
        if not isinstance(tri, DirectedTriangleTable):
            tri = count_directed_triangles(net)
        if keys != tri.arcs:
            raise ValueError("measure keys do not match the graph's arcs")
        out.append(",".join(["u", "v", "t_t", "t_c"] + ids))
        for i, (u, v) in enumerate(keys):
            row = [_q(net.label(u)), _q(net.label(v)), str(tri.t_t[i]), str(tri.t_c[i])]
            row.extend(_f5(t.values[i]) for t in tables)
            out.append(",".join(row))
    else:
        raise ValueError(f"unknown table kind {kind!r}")
    return "\n".join(out) + "\n"


def _triangle_csv(net, table) -> str:
    out: list[str] = []
    if isinstance(table, EdgeTriangleTable):
        out.append("u,v,t,m,M")
        for i, (u, v) in enumerate(table.edges):
            out.append(
                ",".join(
                    [_q(net.label(u)), _q(net.label(v)), str(table.t[i]), str(table.m[i]), str(table.M[i])]
                )
            )
    else:
        out.append("u,v,t_t,t_c")
        for i, (u, v) in enumerate(table.arcs):
            out.append(
                ",".join([_q(net.label(u)), _q(net.label(v)), str(table.t_t[i]), str(table.t_c[i])])
            )
    return "\n".join(out) + "\n"


def write_scatter_csv(data) -> str:
    """Paired values as CSV with columns x, y, key.

    Header names the two measures; keys are 1-based node ids or "u-v"
    pairs so rows can be joined back to the .net file.
    """
    out = [f"{data.x_id},{data.y_id},key"]
    for key, x, y in zip(data.keys, data.xs, data.ys):
        if isinstance(key, tuple):
            key_text = f"{key[0] + 1}-{key[1] + 1}"
        else:
            key_text = str(key + 1)
        out.append(f"{_f5(x)},{_f5(y)},{key_text}")
    return "\n".join(out) + "\n"
