"""Stability conditions on holomorphic triples over a curve, at class level."""

from .classify import ConditionStarData, Verdict, fixed_point, normalize, trichotomy
from .errors import DomainError
from .gltilde import (
    LiftedElement,
    Mat2,
    RhoPoint,
    compose,
    eval_lift,
    inverse_lift,
    invert,
    iwasawa,
    recompose,
    rho,
    rho_inverse,
    shift,
)
from .glue import GluedDescriptor, alpha_charge, check_gluing, glued_charge, jealousy
from .kclass import CurveClass, TripleClass
from .tiltgamma import GammaParams

__version__ = "0.1.0"

__all__ = [
    "ConditionStarData",
    "CurveClass",
    "DomainError",
    "GammaParams",
    "GluedDescriptor",
    "LiftedElement",
    "Mat2",
    "RhoPoint",
    "TripleClass",
    "Verdict",
    "alpha_charge",
    "check_gluing",
    "compose",
    "eval_lift",
    "fixed_point",
    "glued_charge",
    "inverse_lift",
    "invert",
    "iwasawa",
    "jealousy",
    "normalize",
    "recompose",
    "rho",
    "rho_inverse",
    "shift",
    "trichotomy",
]
