"""Vertex degrees and adjacency in the skeleton of the matching polytope."""

from .good import (
    AlternatingStructure,
    DegreeBreakdown,
    StructureKind,
    classify_alternating_path,
    degree_of_matching,
    enumerate_good_cycles,
    enumerate_good_paths,
    neighbors_of_matching,
)
from .graph import (
    Graph,
    GraphError,
    ParseError,
    StarsTrianglesDecomposition,
    common_neighbors,
    connected_components,
    decompose_stars_triangles,
    degree,
    is_bond,
    is_pendant_edge,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .matching import (
    AdjacencyWitness,
    Matching,
    MatchingError,
    WitnessKind,
    classify_adjacency,
    count_matchings,
    enumerate_matchings,
    has_common_neighbors,
    is_adjacent_by_connectivity,
    make_matching,
    saturated_vertices,
    symmetric_difference,
)
from .skeleton import (
    CapExceeded,
    ClosedFormBreakdown,
    SkeletonGraph,
    SkeletonStats,
    build_skeleton,
    build_skeleton_pairwise,
    degree_closed_form,
    is_min_degree_matching,
    predict_regular,
    stats,
)
from .export import export_dot, export_json
from .verify import VerificationReport, verify_all

__version__ = "0.1.0"
