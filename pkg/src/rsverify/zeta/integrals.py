"""
Local zeta integrals as truncated torus sums.

Each evaluator enumerates the torus support, multiplies the exact factors of
the integrand and files the summand under its power of X = q^-s.
"""

import logging
from fractions import Fraction
from typing import List, Optional

from ..algebra.partitions import compositions_up_to, partitions_up_to
from ..algebra.polynomial import MPoly
from ..algebra.series import TruncSeries
from ..core.errors import InternalCheckError, UsageError
from ..groups.characters import ExpChar, conj_measure_factor, delta_borel
from ..groups.cochar import Cochar, embed_torus
from ..groups.patterns import PatternGroups, build_patterns
from ..whittaker.parameters import ParameterSpace
from ..whittaker.values import cs_value, levi_value, speh_torus_value

logger = logging.getLogger(__name__)


def _label(space: ParameterSpace, n: int) -> str:
    return f"(r,m,n)=({space.r},{space.m},{n})"


def _monomial(variables: List[MPoly], exponents: Cochar, one: MPoly) -> MPoly:
    result = one
    for x, e in zip(variables, exponents):
        if e:
            result = result * x ** e
    return result


def eval_jpss(space: ParameterSpace, order: int, perturb: bool = False) -> TruncSeries:
    """
    The GL_r x GL_m integral (n = 1, r < m) as a sum over partitions.

    Summand at lam: delta_B^-1(p^lam) W_x(p^lam) W_y(p^(lam,0)) |det|^(-(m-r)/2) X^|lam|.
    The v-exponents must cancel exactly.
    """
    r, m = space.r, space.m
    if not r < m:
        raise UsageError(f"The GL_r x GL_m integral needs r < m, got r={r}, m={m}")
    x_params, y_params = space.x_params(), space.y_params()
    delta_inv = delta_borel(r).scale(-1)
    shift = ExpChar.uniform(r, Fraction(-(m - r), 2))
    coeffs = [space.ring.zero()] * (order + 1)

    for lam in partitions_up_to(order, max_rows=r):
        t = Cochar(lam.padded(r))
        wx = cs_value(x_params, t)
        wy = cs_value(y_params, Cochar(lam.padded(m)), perturb)
        v_exponent = delta_inv.v_exponent(t) + wx.v_exponent + wy.v_exponent + shift.v_exponent(t)
        if v_exponent != 0:
            raise InternalCheckError(f"v-exponent {v_exponent} at lam={lam} does not cancel", case=_label(space, 1))
        coeffs[lam.weight] = coeffs[lam.weight] + wx.schur_part * wy.schur_part
    return TruncSeries(space.ring, order, coeffs)


def eval_I(
    space: ParameterSpace,
    n: int,
    order: int,
    convention: str = "Q",
    perturb: bool = False,
    patterns: Optional[PatternGroups] = None,
) -> TruncSeries:
    """
    The generating-function integral through the unfolding chain, for nm > 1.

    Sums over t = diag(p^(n k_1), .., p^(n k_r)) with k_i >= 0 and n*sum(k) <= order:
    chi(t) alpha(t) W_Levi(w0 t0 w0^-1) delta_B^(-1/2)(t) |t|^(s') with
    s' = s - (mnr - 2r + 1)/2.
    """
    r, m = space.r, space.m
    nm = n * m
    if nm <= 1:
        raise UsageError(f"The unfolding chain needs nm > 1, got n={n}, m={m}")
    patterns = patterns or build_patterns(n, m, r)
    alpha = conj_measure_factor(patterns.U3)
    borel = delta_borel(r).scale(Fraction(-1, 2))
    shift = ExpChar.uniform(r, Fraction(-(m * n * r - 2 * r + 1), 2))
    y_params = space.y_params(n)
    one = space.ring.one()
    coeffs = [space.ring.zero()] * (order + 1)

    for k in compositions_up_to(r, order // n):
        t = Cochar(k).scaled(n)
        levi = levi_value(y_params, r, t, convention, perturb)
        if levi.is_zero():
            continue
        degree = t.total()
        if degree != n * sum(k) or degree > order:
            raise InternalCheckError(f"Summand at k={k} lands in degree {degree}", case=_label(space, n))
        v_exponent = (
            alpha.v_exponent(embed_torus(t.vals, n, m, r))
            + levi.v_exponent
            + borel.v_exponent(t)
            + shift.v_exponent(t)
        )
        logger.debug(f"eval_I {_label(space, n)} k={k}: X^{degree} v^{v_exponent}")
        term = _monomial(space.x, t, one) * levi.schur_part * space.v_power(v_exponent)
        coeffs[degree] = coeffs[degree] + term
    return TruncSeries(space.ring, order, coeffs)


def eval_tensor_integral_rank1(space: ParameterSpace, n: int, order: int, perturb: bool = False) -> TruncSeries:
    """
    The tensor integral for r = 1: sum_k x1^k W(diag(p^k, I)) q^(-k(s - (nm-1)/2)).

    Only k in n*Z contribute.
    """
    if space.r != 1:
        raise UsageError(f"The rank-one tensor integral needs r = 1, got r={space.r}")
    nm = n * space.m
    if nm <= 1:
        raise UsageError(f"The rank-one tensor integral needs nm > 1, got n={n}, m={space.m}")
    y_params = space.y_params(n)
    x = space.x[0]
    coeffs = [space.ring.zero()] * (order + 1)
    for valuation in range(order + 1):
        w = speh_torus_value(y_params, valuation, perturb)
        if w.is_zero():
            continue
        v_exponent = w.v_exponent + valuation * (nm - 1)
        coeffs[valuation] = x ** valuation * w.schur_part * space.v_power(v_exponent)
    return TruncSeries(space.ring, order, coeffs)
