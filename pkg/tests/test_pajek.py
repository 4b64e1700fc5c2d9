"""Pajek .net parsing/writing, .vec and CSV rendering."""

from __future__ import annotations

import pytest

from netdensity.generators import complete, random_graph
from netdensity.graph import DiGraph, Graph, build_digraph, build_graph
from netdensity.measures import compute, overlap
from netdensity.pajek import (
    NetParseError,
    parse_net,
    write_csv,
    write_net,
    write_scatter_csv,
    write_vec,
)
from netdensity.triangles import count_edge_triangles


def test_parse_minimal_path():
    g, diag = parse_net("*Vertices 3\n*Edges\n1 2\n2 3\n")
    assert isinstance(g, Graph)
    assert g.n == 3 and g.edges == ((0, 1), (1, 2))
    assert diag.weights_discarded == 0


def test_parse_arcs_gives_digraph():
    d, _ = parse_net("*Vertices 2\n*Arcs\n1 2\n")
    assert isinstance(d, DiGraph)
    assert d.arcs == ((0, 1),)


def test_parse_labels_and_coordinates():
    text = '*Vertices 3\n1 "Alpha Base" 0.1 0.2 0.5\n2 "Beta"\n*Edges\n1 2\n'
    g, _ = parse_net(text)
    assert g.labels == ("Alpha Base", "Beta", "v3")


def test_parse_bare_label():
    g, _ = parse_net("*Vertices 2\n1 hub\n2 leaf\n*Edges\n1 2\n")
    assert g.labels == ("hub", "leaf")


def test_parse_tolerates_comments_weights_and_crlf():
    plain = "*Vertices 3\n*Edges\n1 2\n2 3\n"
    noisy = "% header comment\r\n*vertices 3\r\n% inner\r\n*EDGES\r\n1 2 4.5\r\n% another\r\n2 3 1\r\n"
    g1, _ = parse_net(plain)
    g2, diag = parse_net(noisy)
    assert g1.edges == g2.edges and g1.n == g2.n
    assert diag.weights_discarded == 2


def test_parse_counts_loops_and_duplicates():
    g, diag = parse_net("*Vertices 3\n*Edges\n1 2\n2 1\n3 3\n")
    assert g.edges == ((0, 1),)
    assert diag.duplicates_dropped == 1
    assert diag.loops_dropped == 1


def test_parse_edges_in_arc_file_expand_to_both_directions():
    d, _ = parse_net("*Vertices 3\n*Arcs\n1 2\n*Edges\n2 3\n")
    assert isinstance(d, DiGraph)
    assert d.arcs == ((0, 1), (1, 2), (2, 1))


def test_parse_empty_arcs_section_with_edges_stays_undirected():
    g, _ = parse_net("*Vertices 3\n*Arcs\n*Edges\n1 2\n")
    assert isinstance(g, Graph)


def test_parse_arcs_header_alone_gives_directed():
    d, _ = parse_net("*Vertices 2\n*Arcs\n")
    assert isinstance(d, DiGraph)
    assert d.arcs == ()


def test_parse_unknown_section_terminates():
    g, _ = parse_net("*Vertices 2\n*Edges\n1 2\n*Partition whatever\n9 9 9\n")
    assert g.edges == ((0, 1),)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(NetParseError, match="missing"):
        parse_net("")
    with pytest.raises(NetParseError, match="line 1"):
        parse_net("1 2\n")
    with pytest.raises(NetParseError, match="line 3"):
        parse_net("*Vertices 2\n*Edges\n1 5\n")
    with pytest.raises(NetParseError, match="line 3"):
        parse_net("*Vertices 2\n*Edges\n1\n")
    with pytest.raises(NetParseError, match="line 2"):
        parse_net('*Vertices 2\n3 "out of range"\n')
    with pytest.raises(NetParseError, match="line 2"):
        parse_net('*Vertices 2\n1 "unterminated\n')
    with pytest.raises(NetParseError, match="line 1"):
        parse_net("*Edges\n1 2\n")
    with pytest.raises(NetParseError, match="two-mode"):
        parse_net("*Vertices 4 2\n")


def test_parse_error_exposes_line_attribute():
    try:
        parse_net("*Vertices 2\n*Edges\nx y\n")
    except NetParseError as exc:
        assert exc.line_no == 3
    else:
        pytest.fail("expected NetParseError")


def test_write_k3():
    text = write_net(complete(3))
    assert text == '*Vertices 3\n1 "v1"\n2 "v2"\n3 "v3"\n*Edges\n1 2\n1 3\n2 3\n'


def test_write_empty_graph():
    assert write_net(build_graph(0, [])[0]) == "*Vertices 0\n"


def test_write_digraph_keeps_directedness():
    d, _ = build_digraph(2, [(1, 0)])
    text = write_net(d)
    assert "*Arcs" in text
    back, _ = parse_net(text)
    assert isinstance(back, DiGraph)
    assert back.arcs == d.arcs


def test_round_trip_random_graphs():
    for seed in range(8):
        g = random_graph(12 + seed, 0.3, seed=seed)
        labeled, _ = build_graph(g.n, g.edges, [f"node {i}" for i in range(g.n)])
        back, _ = parse_net(write_net(labeled))
        assert back.n == labeled.n
        assert back.edges == labeled.edges
        assert back.labels == labeled.labels


def test_round_trip_edgeless_directed():
    d, _ = build_digraph(3, [])
    back, _ = parse_net(write_net(d))
    assert isinstance(back, DiGraph) and back.n == 3 and back.arcs == ()


def test_labels_with_quotes_are_demoted():
    g, _ = build_graph(1, [], labels=['say "hi"'])
    back, _ = parse_net(write_net(g))
    assert back.labels == ("say 'hi'",)


def test_write_vec_formats():
    assert write_vec([0, 1]) == "*Vertices 2\n0\n1\n"
    assert write_vec([0.25, 2.0]) == "*Vertices 2\n0.25\n2\n"


def test_write_vec_k4_clustering():
    g = complete(4)
    table = compute(g, "cc")
    assert write_vec(table.values, g.n) == "*Vertices 4\n1\n1\n1\n1\n"


def test_write_vec_length_mismatch():
    with pytest.raises(ValueError):
        write_vec([1.0], n=2)


def test_csv_k3_overlap():
    g = complete(3)
    tri = count_edge_triangles(g)
    text = write_csv(g, overlap(g, tri), tri)
    lines = text.splitlines()
    assert lines[0] == "u,v,t,m,M,overlap"
    assert lines[1] == '"v1","v2",1,1,1,1.00000'
    assert len(lines) == 4


def test_csv_empty_graph_is_header_only():
    g = build_graph(0, [])[0]
    tri = count_edge_triangles(g)
    assert write_csv(g, overlap(g, tri), tri) == "u,v,t,m,M,overlap\n"


def test_csv_multiple_measures_share_rows():
    g = complete(4)
    tri = count_edge_triangles(g)
    tables = [compute(g, "overlap", tri), compute(g, "overlap_corrected", tri)]
    lines = write_csv(g, tables, tri).splitlines()
    assert lines[0] == "u,v,t,m,M,overlap,overlap_corrected"
    assert lines[1].endswith("1.00000,1.00000")


def test_csv_node_rows_carry_degree_and_neighborhood_edges():
    g = complete(4)
    lines = write_csv(g, compute(g, "cc")).splitlines()
    assert lines[0] == "node,deg,E,cc"
    assert lines[1] == '"v1",3,3,1.00000'


def test_csv_label_quoting():
    g, _ = build_graph(2, [(0, 1)], labels=['a,b', 'say "hi"'])
    lines = write_csv(g, compute(g, "overlap")).splitlines()
    assert lines[1].startswith('"a,b","say ""hi"""')


def test_csv_rejects_mixed_tables():
    g = complete(3)
    with pytest.raises(ValueError):
        write_csv(g, [compute(g, "overlap"), compute(g, "cc")])


def test_csv_triangle_table():
    g = complete(3)
    tri = count_edge_triangles(g)
    lines = write_csv(g, tri).splitlines()
    assert lines[0] == "u,v,t,m,M"
    assert lines[1] == '"v1","v2",1,1,1'


def test_scatter_csv_keys():
    from netdensity.analysis import scatter

    g = complete(3)
    tri = count_edge_triangles(g)
    data = scatter(compute(g, "t_raw", tri), compute(g, "overlap", tri))
    lines = write_scatter_csv(data).splitlines()
    assert lines[0] == "t_raw,overlap,key"
    assert lines[1] == "1.00000,1.00000,1-2"


def test_parse_usair_reference_counts(usair):
    assert usair.n == 332
    assert usair.edge_count == 2126
