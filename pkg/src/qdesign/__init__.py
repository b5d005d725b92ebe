"""Exact intersection-number calculus for subspace designs."""

from .designcalc import (
    DesignParams,
    NotAdmissibleError,
    complement_params,
    dual_params,
    is_prime_power,
    lambda_ij,
    lambda_ij_closed,
    lambda_table,
    steiner3_bound_check,
)
from .intersect import (
    IntersectionVector,
    enumerate_feasible,
    fano_derived_design,
    fano_distribution,
    fano_structure_graph,
    koehler_forms,
    mendelsohn_system,
    nonexistence_check,
    unique_vector,
)
from .qpoly import SYMBOLIC, QMode, QPolynomial, cyclotomic, factor_cyclotomic, gauss_poly, q_factorial, q_integer

__version__ = "0.1.0"
