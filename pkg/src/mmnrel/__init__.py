"""Reliability polynomials of matchstick minimal networks.

Exact N-form coefficients by exhaustive enumeration, exact rational
polynomial algebra, a quadratic-spline approximation for dual pairs, and
shape diagnostics tying them together.
"""

from .approx import (
    ApproxInputs,
    ApproxResult,
    OpCounter,
    approximate_pair,
    chebyshev_error,
    default_inputs,
    error_bound,
    half_point_error,
    inputs_from_first_coefficients,
)
from .exact import (
    CoefficientVector,
    EnumerationCapExceeded,
    brute_force_coefficients,
    dual_coefficients,
    pos_coefficients,
    sop_coefficients,
)
from .network import (
    MatchstickNetwork,
    dual,
    from_matrix,
    make_hammock,
    make_pos,
    make_sop,
    parse_network,
    read_network,
)
from .polyalg import NFormPolynomial, PowerPolynomial, derivative, to_power_basis
from .shape import ShapeReport, argmax_intervals, compute_E, vertex_analysis, verify_all

__version__ = "0.1.0"

__all__ = [
    "ApproxInputs",
    "ApproxResult",
    "OpCounter",
    "approximate_pair",
    "chebyshev_error",
    "default_inputs",
    "error_bound",
    "half_point_error",
    "inputs_from_first_coefficients",
    "CoefficientVector",
    "EnumerationCapExceeded",
    "brute_force_coefficients",
    "dual_coefficients",
    "pos_coefficients",
    "sop_coefficients",
    "MatchstickNetwork",
    "dual",
    "from_matrix",
    "make_hammock",
    "make_pos",
    "make_sop",
    "parse_network",
    "read_network",
    "NFormPolynomial",
    "PowerPolynomial",
    "derivative",
    "to_power_basis",
    "ShapeReport",
    "argmax_intervals",
    "compute_E",
    "vertex_analysis",
    "verify_all",
]
