"""Exact counting of graph orientations with per-vertex out-degree constraints."""

from .constraints import ConstraintProfile, parse_constraints
from .duality import (CountReport, GaugePair, MCEstimate, duality_count,
                      generalized_duality_count, mc_estimate)
from .errors import CapExceededError, InvariantError
from .graph import Graph, VertexPartition, connected_components, induced_subgraph, parse_graph
from .oracle import brute_force_count, count_from_expansion, expand_orientation_polynomial
from .poly import AdmissibleSet, IntPoly, binom_expand, coeff_sum, poly_mul, vertex_table
from .special import (RegularWeights, eulerian_regular_count, even_orientation_count,
                      mixed_count, mixed_lower_bound, n_divisible_count)

__all__ = [
    "AdmissibleSet", "CapExceededError", "ConstraintProfile", "CountReport", "GaugePair",
    "Graph", "IntPoly", "InvariantError", "MCEstimate", "RegularWeights", "VertexPartition",
    "binom_expand", "brute_force_count", "coeff_sum", "connected_components",
    "count_from_expansion", "duality_count", "eulerian_regular_count",
    "even_orientation_count", "expand_orientation_polynomial", "generalized_duality_count",
    "induced_subgraph", "mc_estimate", "mixed_count", "mixed_lower_bound",
    "n_divisible_count", "parse_constraints", "parse_graph", "poly_mul", "vertex_table",
]
