"""GL_N scaffolding: cocharacters, Weyl elements, coordinate patterns and exponent functionals."""

from .characters import ExpChar, alpha_closed_form, conj_measure_factor, delta_borel, delta_parabolic
from .cochar import Cochar, PermMat, build_w0, build_wJ, conj_cochar, embed_torus, t0_positions
from .identities import (
    CaseChecks,
    check_exponent_identities,
    check_structure,
    collapse_weights,
    collapse_check,
    resolve_levi_convention,
)
from .patterns import CoordSet, PatternGroups, build_patterns, check_u3_constraints

__all__ = [
    "ExpChar",
    "alpha_closed_form",
    "conj_measure_factor",
    "delta_borel",
    "delta_parabolic",
    "Cochar",
    "PermMat",
    "build_w0",
    "build_wJ",
    "conj_cochar",
    "embed_torus",
    "t0_positions",
    "CaseChecks",
    "check_exponent_identities",
    "check_structure",
    "collapse_weights",
    "collapse_check",
    "resolve_levi_convention",
    "CoordSet",
    "PatternGroups",
    "build_patterns",
    "check_u3_constraints",
]
