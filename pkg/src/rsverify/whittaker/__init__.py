"""Unramified Whittaker-value oracles."""

from .parameters import ParameterSpace, SatakeParams
from .values import (
    WhittakerValue,
    cs_value,
    derive_rank1_coefficients,
    levi_value,
    speh_rank1_value,
    speh_torus_value,
)

__all__ = [
    "ParameterSpace",
    "SatakeParams",
    "WhittakerValue",
    "cs_value",
    "derive_rank1_coefficients",
    "levi_value",
    "speh_rank1_value",
    "speh_torus_value",
]
