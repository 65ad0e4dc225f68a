"""Uniform star-factor weightings of finite simple graphs.

Decides whether a graph admits a strictly positive edge-weighting under
which every star-factor has the same total weight, via a brute-force
exact-rational oracle and a structural classifier for girth >= 5,
cross-validated by an exhaustive small-graph census.
"""

__version__ = "0.1.0"

from .graph import (
    Girth,
    Graph,
    GraphError,
    VertexClass,
    classify_vertices,
    connected_components,
    delete_edges,
    girth,
    induced_delete,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .factors import (
    CapExceeded,
    StarFactor,
    VacuousGraph,
    edge_count_spectrum,
    enumerate_star_factors,
    incidence_vectors,
)
from .solver import (
    OracleResult,
    OracleVerdict,
    Refutation,
    Weighting,
    Witness,
    decide_uniform_weighting,
    difference_matrix,
    omega_oracle,
    verify_outcome,
)
from .classifier import (
    CaseTag,
    Classification,
    Route,
    Verdict,
    classify,
    classify_connected_girth5,
    construct_weighting,
    remove_leaves_and_stems,
)
from .census import (
    CensusRow,
    cross_validate,
    generate_connected,
    generate_connected_girth5,
    report,
)

__all__ = [
    "__version__",
    "Girth",
    "Graph",
    "GraphError",
    "VertexClass",
    "classify_vertices",
    "connected_components",
    "delete_edges",
    "girth",
    "induced_delete",
    "parse_edge_list",
    "parse_graph6",
    "to_graph6",
    "CapExceeded",
    "StarFactor",
    "VacuousGraph",
    "edge_count_spectrum",
    "enumerate_star_factors",
    "incidence_vectors",
    "OracleResult",
    "OracleVerdict",
    "Refutation",
    "Weighting",
    "Witness",
    "decide_uniform_weighting",
    "difference_matrix",
    "omega_oracle",
    "verify_outcome",
    "CaseTag",
    "Classification",
    "Route",
    "Verdict",
    "classify",
    "classify_connected_girth5",
    "construct_weighting",
    "remove_leaves_and_stems",
    "CensusRow",
    "cross_validate",
    "generate_connected",
    "generate_connected_girth5",
    "report",
]
