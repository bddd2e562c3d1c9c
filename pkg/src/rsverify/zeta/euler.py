"""The local tensor-product L-function as a truncated Euler product."""

import logging

from ..algebra.series import TruncSeries, ts_invert
from ..core.errors import UsageError
from ..whittaker.parameters import ParameterSpace

logger = logging.getLogger(__name__)


def euler_product(space: ParameterSpace, n: int, order: int, substituted: bool = True) -> TruncSeries:
    """
    prod_{i,j} (1 - x_i^n y_j^n X^n v^(n-1))^-1 truncated at X^order.

    With ``substituted=False`` the plain factors (1 - x_i y_j X)^-1 are used.
    """
    if n < 1:
        raise UsageError(f"n must be >= 1, got {n}")
    if order < 0:
        raise UsageError(f"Truncation order must be nonnegative, got {order}")
    ring = space.ring
    step = n if substituted else 1
    shift = space.v_power(n - 1) if substituted else ring.one()

    result = TruncSeries.one(ring, order)
    for x in space.x:
        for y in space.y:
            root = (x * y) ** step * shift
            factor = TruncSeries.one(ring, order) - TruncSeries.monomial(ring, order, step, root)
            result = result * ts_invert(factor)
    logger.debug(f"Euler product for (r,m,n)=({space.r},{space.m},{n}) to order {order}")
    return result
