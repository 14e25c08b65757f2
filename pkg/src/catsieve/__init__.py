"""Exact cyclic sieving checks for Catalan families under rotation."""
from .actions import cyclic_action, fixed_point_count, orbit_decomposition
from .closedform import catalan, catalan_sum_identity, fixed_count_formula, half_catalan_at_root, rhs_closed_form
from .csp import CspReport, FamilyDescriptor, burnside_check, family_descriptor, verify_csp
from .objects import (
    Configuration,
    Matching,
    SizeLimitError,
    Triangulation,
    enumerate_configurations,
    enumerate_matchings,
    enumerate_triangulations,
    is_noncrossing,
)
from .qpoly import Polynomial, cyclotomic, eval_at_primitive_root, eval_complex, q_binomial, q_catalan

__version__ = "0.1.0"
