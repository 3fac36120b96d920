"""Finite fields, polynomials and the explicit inseparability criteria."""

from .criteria import (
    CubicSurface,
    DoublePlaneCover,
    FlexReport,
    FlexVerdict,
    case2a_insep_conditions,
    case2b_insep_conditions,
    case2c_cusp_slope,
    cubic_all_cuspidal_condition,
    cubic_c4,
    double_cover_singular_search,
    is_klein_branch,
    nonreflexive_sample_test,
    projective_points,
    singular_points,
    tangent_flex_multiplicity,
)
from .field import CONWAY, GF, FiniteField
from .poly import FinitePoly, format_poly, parse_poly

