"""Kapranov motivic zeta functions of curves and Severi-Brauer classes,
with a brute-force finite-field oracle for the counting specialisation."""

from .constructors import (
    PointedCurveData,
    PointlessCurveData,
    normalization_transfer,
    zeta_pointed_curve,
    zeta_pointless_curve,
    zeta_projective_space,
    zeta_zero_dim_counting,
)
from .errors import MotivicError
from .ring import L, ONE, ZERO, RingElement, count_specialize, parse, projective_space_class, substitute
from .series import DenominatorFactor, RationalForm, TruncatedSeries, clear_denominator, expand
from .severi_brauer import SBClassData, sb_filtration_class, sb_isotypic_class, sb_reduced_class

__all__ = [
    "L",
    "ONE",
    "ZERO",
    "RingElement",
    "parse",
    "substitute",
    "count_specialize",
    "projective_space_class",
    "TruncatedSeries",
    "RationalForm",
    "DenominatorFactor",
    "expand",
    "clear_denominator",
    "PointedCurveData",
    "PointlessCurveData",
    "zeta_projective_space",
    "zeta_pointed_curve",
    "zeta_pointless_curve",
    "zeta_zero_dim_counting",
    "normalization_transfer",
    "SBClassData",
    "sb_isotypic_class",
    "sb_reduced_class",
    "sb_filtration_class",
    "MotivicError",
]
