"""Spectral distance-regularity certificates and a small-graph counterexample scan.

A connected graph with d+1 distinct adjacency eigenvalues and finite odd
girth at least 2d+1 must be distance-regular (a generalized odd graph).  This
package verifies that statement constructively on concrete graphs — spectrum,
predistance polynomials, idempotents, local multiplicities, certificates —
and scans every labeled connected graph on up to 7 vertices for violations.
"""

from .graphs import (
    UNREACHABLE,
    DistanceData,
    Graph,
    GraphError,
    distance_data,
    edge_pairs,
    encode_graph6,
    enumerate_connected,
    generate_family,
    graph_from_edges,
    graph_from_mask,
    graph_mask,
    odd_girth,
    parse_edge_list,
    parse_graph6,
)
from .predistance import (
    PredistanceError,
    PredistanceSystem,
    check_parity,
    hoffman_polynomial,
    poly_eval,
    poly_eval_matrix,
    predistance_polynomials,
    recurrence_coefficients,
    spectral_inner_product,
)
from .spectral import (
    NumericalError,
    Spectrum,
    closed_walk_count,
    idempotent_residuals,
    idempotents,
    is_walk_regular,
    local_multiplicities,
    spectrum,
    walk_regular_spread,
)
from .verify import (
    Certificate,
    IntersectionArray,
    NotDistanceRegular,
    TheoremReport,
    Tolerances,
    check_distance_polynomial,
    check_eigenvalue_symmetry,
    check_hoffman,
    check_walk_regular,
    distance_matrices,
    excess_comparison,
    intersection_array,
    vandermonde_certificate,
    verify_theorem,
)

__version__ = "0.1.0"
