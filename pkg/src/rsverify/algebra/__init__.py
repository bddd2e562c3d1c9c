"""Exact arithmetic kernel: polynomials, partitions, symmetric functions, truncated series."""

from .partitions import Partition, compositions_up_to, partitions, partitions_up_to
from .polynomial import MPoly, PolyRing, determinant, mp_arith
from .series import TruncSeries, ts_arith, ts_invert
from .symmetric import epoly, hpoly, schur, schur_tableaux

__all__ = [
    "MPoly",
    "PolyRing",
    "Partition",
    "TruncSeries",
    "compositions_up_to",
    "determinant",
    "epoly",
    "hpoly",
    "mp_arith",
    "partitions",
    "partitions_up_to",
    "schur",
    "schur_tableaux",
    "ts_arith",
    "ts_invert",
]
