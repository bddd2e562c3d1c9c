"""
Unramified Whittaker values at torus elements.

A value is kept as a polynomial part times a power of v, so that the
evaluators can check the v-bookkeeping separately from the symmetric
functions.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from ..algebra.partitions import Partition
from ..algebra.polynomial import MPoly, PolyRing
from ..algebra.series import TruncSeries, ts_invert
from ..algebra.symmetric import hpoly, schur
from ..core.errors import InternalCheckError, UsageError
from ..groups.characters import delta_borel, delta_parabolic
from ..groups.cochar import Cochar, embed_torus
from ..groups.identities import levi_blocks
from .parameters import SatakeParams

logger = logging.getLogger(__name__)

# --perturb doubles the oracle value at this degree
PERTURBED_DEGREE = 1
PERTURB_FACTOR = 2


@dataclass(frozen=True)
class WhittakerValue:
    """schur_part * v^v_exponent."""

    schur_part: MPoly
    v_exponent: int = 0

    @classmethod
    def zero(cls, ring: PolyRing) -> "WhittakerValue":
        return cls(ring.zero(), 0)

    @classmethod
    def one(cls, ring: PolyRing) -> "WhittakerValue":
        return cls(ring.one(), 0)

    def is_zero(self) -> bool:
        return self.schur_part.is_zero()

    def __mul__(self, other: "WhittakerValue") -> "WhittakerValue":
        return WhittakerValue(self.schur_part * other.schur_part, self.v_exponent + other.v_exponent)

    def shifted(self, v_exponent: int) -> "WhittakerValue":
        """Multiply by v^v_exponent."""
        return WhittakerValue(self.schur_part, self.v_exponent + v_exponent)

    def poly(self, v: MPoly) -> MPoly:
        """The value as a single polynomial, for the given v (generator or constant)."""
        if self.is_zero():
            return self.schur_part
        return self.schur_part * v ** self.v_exponent


def _perturbed(value: WhittakerValue, degree: int, perturb: bool) -> WhittakerValue:
    if perturb and degree == PERTURBED_DEGREE:
        logger.debug(f"Perturbing the oracle value at degree {degree}")
        return WhittakerValue(value.schur_part.scale(PERTURB_FACTOR), value.v_exponent)
    return value


def cs_value(params: SatakeParams, lam: Cochar, perturb: bool = False) -> WhittakerValue:
    """
    Casselman-Shalika value W(p^lam) = delta_B^(1/2)(p^lam) s_lam(params) for GL_N.

    Zero unless lam is dominant with a nonnegative last entry.
    """
    if params.cover_degree != 1:
        raise UsageError(f"Casselman-Shalika values need a linear group, got cover degree {params.cover_degree}")
    size = params.group_rank
    if lam.size != size:
        raise UsageError(f"Cocharacter of length {lam.size} for GL_{size}")
    ring = params.ring
    if not lam.is_dominant() or (size and lam[size - 1] < 0):
        return WhittakerValue.zero(ring)
    partition = Partition(lam.vals)
    v_exponent = delta_borel(size).scale(Fraction(1, 2)).v_exponent(lam)
    value = WhittakerValue(schur(partition, params.vars, ring), v_exponent)
    return _perturbed(value, partition.weight, perturb)


def speh_rank1_value(params: SatakeParams, k: int, perturb: bool = False) -> WhittakerValue:
    """
    W at diag(p^(nk), I_(nm-1)) for the Speh-type representation of the n-fold cover of GL_nm.

    Equals h_k(y_1^n..y_m^n) v^(-k(n^2 m - 2n + 1)); zero for k < 0.
    """
    n, m = params.cover_degree, params.group_rank
    ring = params.ring
    if k < 0:
        return WhittakerValue.zero(ring)
    value = WhittakerValue(hpoly(k, params.powered(), ring), -k * (n * n * m - 2 * n + 1))
    return _perturbed(value, k, perturb)


def speh_torus_value(params: SatakeParams, valuation: int, perturb: bool = False) -> WhittakerValue:
    """W at diag(p^valuation, I_(nm-1)); zero off n*Z_{>=0}."""
    n = params.cover_degree
    if valuation < 0 or valuation % n:
        return WhittakerValue.zero(params.ring)
    return speh_rank1_value(params, valuation // n, perturb)


def levi_value(params: SatakeParams, r: int, a_valuations: Cochar, convention: str = "Q", perturb: bool = False) -> WhittakerValue:
    """
    prod_i W(diag(a_i, I_(nm-1))) * delta^((nm-1)/(2nm))(w0 t0 w0^-1).

    ``a_valuations`` are the valuations of a_1..a_r; delta is taken for the
    Levi given by ``convention``.
    """
    n, m = params.cover_degree, params.group_rank
    nm = n * m
    if nm <= 1:
        raise UsageError(f"The Levi factorization needs nm > 1, got n={n}, m={m}")
    if a_valuations.size != r:
        raise UsageError(f"{a_valuations.size} valuations for r={r}")

    value = WhittakerValue.one(params.ring)
    for a in a_valuations:
        factor = speh_torus_value(params, a, perturb)
        if factor.is_zero():
            return WhittakerValue.zero(params.ring)
        value = value * factor

    delta = delta_parabolic(levi_blocks(n, m, r, convention), size=nm * r)
    twist = delta.scale(Fraction(nm - 1, 2 * nm))
    return value.shifted(twist.v_exponent(embed_torus(a_valuations.vals, n, m, r)))


def derive_rank1_coefficients(m: int, n: int, order: int) -> List[MPoly]:
    """
    Solve for c_k from a single Euler factor.

    Expands prod_j (1 - x^n y_j^n X^n v^(n-1))^-1 in the ring of x1, y1..ym, v and
    divides the X^(nk) coefficient by x^(nk) v^(nk(nm-1)). Returns [c_0, c_1, ..]
    for nk <= order.
    """
    if min(m, n) < 1 or n * m <= 1:
        raise UsageError(f"Rank-one coefficients need m, n >= 1 and nm > 1, got m={m}, n={n}")
    ring = PolyRing.for_case(1, m)
    x = ring.gen("x1")
    v = ring.gen("v")
    product = TruncSeries.one(ring, order)
    for j in range(m):
        y = ring.gen(f"y{j + 1}")
        factor = TruncSeries.one(ring, order) - TruncSeries.monomial(ring, order, n, (x * y) ** n * v ** (n - 1))
        product = product * ts_invert(factor)

    coefficients = []
    for degree in range(order + 1):
        coeff = product.coefficient(degree)
        if degree % n:
            if not coeff.is_zero():
                raise InternalCheckError(f"Nonzero coefficient at X^{degree} off n*Z", case=f"m={m}, n={n}")
            continue
        k = degree // n
        coefficients.append(coeff.divide_monomial({"x1": n * k, "v": n * k * (n * m - 1)}))
    return coefficients
