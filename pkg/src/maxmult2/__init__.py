"""Classify graphs whose symmetric matrices reach eigenvalue multiplicity two.

For a simple undirected graph G, S(G) is the set of real symmetric matrices
whose off-diagonal zero pattern matches the non-edges of G, and M(G) is the
largest eigenvalue multiplicity over S(G).  This package decides the
trichotomy M = 1 / M = 2 / M >= 3 exactly and produces machine-checkable
evidence in both directions, plus an independent floating-point oracle.
"""

from .classify import (
    M1,
    M2,
    MGE3,
    Classification,
    ExceptionalReport,
    Ge3Reason,
    classify,
    classify_connected,
    exceptional_test,
    m_upper_by_pendant_reduction,
)
from .graphs import (
    Graph,
    ParseError,
    complete_bipartite,
    complete_graph,
    components,
    core_of,
    cut_vertices,
    cycle_graph,
    is_path,
    parse_edge_list,
    parse_graph6,
    path_graph,
    pendant_path_contract,
    subdivide_edge,
    to_edge_list,
    to_graph6,
)
from .oracle import (
    OracleVerdict,
    RealizationResult,
    estimate_M,
    matrix_from_params,
    maximize_nullity,
    objective_and_gradient,
    verify_corank,
)
from .recognition import (
    HomeomorphWitness,
    ParallelPathsCover,
    SeacDecomposition,
    check_staircase,
    find_hK4,
    find_hK23,
    find_two_parallel_paths,
    is_partial_two_tree,
    seac_decompose,
    tree_path_cover,
)
from .witness import (
    PatternMatrix,
    RationalMatrix,
    TriangularCertificate,
    construct_corank3_hK4,
    construct_corank3_hK23,
    exact_rank,
    lower_bound_certificate,
    parallel_paths_pattern,
    pendant_lift,
    subdivision_project,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "M1",
    "M2",
    "MGE3",
    "Classification",
    "ExceptionalReport",
    "Ge3Reason",
    "Graph",
    "HomeomorphWitness",
    "OracleVerdict",
    "ParallelPathsCover",
    "ParseError",
    "PatternMatrix",
    "RationalMatrix",
    "RealizationResult",
    "SeacDecomposition",
    "TriangularCertificate",
    "check_staircase",
    "classify",
    "classify_connected",
    "complete_bipartite",
    "complete_graph",
    "components",
    "construct_corank3_hK4",
    "construct_corank3_hK23",
    "core_of",
    "cut_vertices",
    "cycle_graph",
    "estimate_M",
    "exact_rank",
    "exceptional_test",
    "find_hK4",
    "find_hK23",
    "find_two_parallel_paths",
    "is_partial_two_tree",
    "is_path",
    "lower_bound_certificate",
    "m_upper_by_pendant_reduction",
    "matrix_from_params",
    "maximize_nullity",
    "objective_and_gradient",
    "parallel_paths_pattern",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "pendant_lift",
    "pendant_path_contract",
    "seac_decompose",
    "subdivide_edge",
    "subdivision_project",
    "to_edge_list",
    "to_graph6",
    "tree_path_cover",
    "verify_certificate",
    "verify_corank",
]
