"""
Symmetric polynomials: complete homogeneous, elementary and Schur.

Variables are passed as polynomials, so the same constructors serve formal
generators, their powers (h_k(y^n)) and specialized rational values.
"""

import logging
from typing import Iterator, List, Optional, Sequence

from ..core.errors import UsageError
from .partitions import Partition
from .polynomial import MPoly, PolyRing, determinant

logger = logging.getLogger(__name__)


def _ring_of(variables: Sequence[MPoly], ring: Optional[PolyRing]) -> PolyRing:
    if ring is not None:
        return ring
    if not variables:
        raise UsageError("An explicit ring is required when no variables are given")
    return variables[0].ring


def complete_homogeneous(top: int, variables: Sequence[MPoly], ring: Optional[PolyRing] = None) -> List[MPoly]:
    """[h_0, ..., h_top] in the given variables."""
    ring = _ring_of(variables, ring)
    h = [ring.one()] + [ring.zero()] * top
    for x in variables:
        # h_d(x_1..x_k) = h_d(x_1..x_{k-1}) + x_k * h_{d-1}(x_1..x_k)
        for d in range(1, top + 1):
            h[d] = h[d] + x * h[d - 1]
    return h


def hpoly(k: int, variables: Sequence[MPoly], ring: Optional[PolyRing] = None) -> MPoly:
    """Complete homogeneous symmetric polynomial h_k."""
    if k < 0:
        raise UsageError(f"h_k needs k >= 0, got {k}")
    return complete_homogeneous(k, variables, ring)[k]


def epoly(k: int, variables: Sequence[MPoly], ring: Optional[PolyRing] = None) -> MPoly:
    """Elementary symmetric polynomial e_k."""
    if k < 0:
        raise UsageError(f"e_k needs k >= 0, got {k}")
    ring = _ring_of(variables, ring)
    e = [ring.one()] + [ring.zero()] * k
    for x in variables:
        for d in range(k, 0, -1):
            e[d] = e[d] + x * e[d - 1]
    return e[k]


def schur(lam: Partition, variables: Sequence[MPoly], ring: Optional[PolyRing] = None) -> MPoly:
    """
    Schur polynomial s_lam via the Jacobi-Trudi determinant det(h_{lam_i - i + j}).

    Returns zero when lam has more rows than there are variables.
    """
    ring = _ring_of(variables, ring)
    if lam.length > len(variables):
        return ring.zero()
    if lam.length == 0:
        return ring.one()
    h = complete_homogeneous(lam.weight + lam.length, variables, ring)

    def entry(i: int, j: int) -> MPoly:
        index = lam.parts[i] - i + j
        return h[index] if index >= 0 else ring.zero()

    matrix = [[entry(i, j) for j in range(lam.length)] for i in range(lam.length)]
    return determinant(matrix, ring)


def semistandard_tableaux(lam: Partition, size: int) -> Iterator[List[List[int]]]:
    """Semistandard fillings of shape lam with entries 0..size-1."""
    cells = list(lam.cells())
    tableau = [[-1] * length for length in lam.parts]

    def backtrack(pos: int) -> Iterator[List[List[int]]]:
        if pos == len(cells):
            yield [row[:] for row in tableau]
            return
        row, col = cells[pos]
        low = 0
        if col > 0:
            low = max(low, tableau[row][col - 1])  # rows weakly increase
        if row > 0:
            low = max(low, tableau[row - 1][col] + 1)  # columns strictly increase
        for val in range(low, size):
            tableau[row][col] = val
            yield from backtrack(pos + 1)
        tableau[row][col] = -1

    yield from backtrack(0)


def schur_tableaux(lam: Partition, variables: Sequence[MPoly], ring: Optional[PolyRing] = None) -> MPoly:
    """Schur polynomial as a sum over semistandard tableaux. Slow; kept as an oracle."""
    ring = _ring_of(variables, ring)
    total = ring.zero()
    for tableau in semistandard_tableaux(lam, len(variables)):
        term = ring.one()
        for row in tableau:
            for val in row:
                term = term * variables[val]
        total = total + term
    return total
