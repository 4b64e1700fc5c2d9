"""Triangle-based local density measures on simple graphs.

Provides immutable graph containers, exact per-edge triangle counting,
overlap and clustering measures with their corrected variants, threshold
cuts and rankings, Pajek .net/.vec and CSV I/O, deterministic graph
generators, and the ``netdensity`` command line tool.
"""

from .analysis import (
    Component,
    CutResult,
    RankedRow,
    ScatterData,
    census_text,
    count_value,
    cut_network,
    degree_pairs,
    edge_cut,
    scatter,
    top_k,
)
from .generators import GenSpec, SplitMix64, complete, cycle, make, path, random_graph, star, t_pattern
from .graph import (
    BuildReport,
    DiGraph,
    Edge,
    Graph,
    GraphError,
    build_digraph,
    build_graph,
    canonical_edge,
)
from .measures import (
    ARC_MEASURES,
    EDGE_MEASURES,
    NODE_MEASURES,
    MeasureTable,
    clustering_coefficient,
    clustering_coefficient_corrected,
    compute,
    compute_directed,
    delta_variants,
    jaccard_and_hamming,
    overlap,
    overlap_corrected,
    overlap_directed,
    overlap_index,
    raw_triangles,
    simple_normalizations,
)
from .pajek import (
    NetParseError,
    ParseDiagnostics,
    parse_net,
    read_net,
    write_csv,
    write_net,
    write_scatter_csv,
    write_vec,
)
from .triangles import (
    DirectedTriangleTable,
    EdgeTriangleTable,
    InternalInvariantError,
    brute_force_triangles,
    count_directed_triangles,
    count_edge_triangles,
    node_neighborhood_edges,
    triangle_total,
)

__version__ = "0.1.0"
