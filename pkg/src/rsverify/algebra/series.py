"""Power series in X = q^(-s), truncated at a fixed order, with polynomial coefficients."""

import hashlib
import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Mapping, Sequence, Tuple

from sympy import QQ
from sympy.polys.ring_series import rs_series_inversion
from sympy.polys.rings import ring as sympy_ring

from ..core.errors import InversionError, UsageError
from .polynomial import MPoly, PolyRing, Scalar

logger = logging.getLogger(__name__)

SERIES_VARIABLE = "X"


@lru_cache(maxsize=None)
def _series_ring(names: Tuple[str, ...]):
    """sympy ring with the series variable appended to the coefficient variables."""
    if SERIES_VARIABLE in names:
        raise UsageError(f"{SERIES_VARIABLE!r} is reserved for the series variable")
    base, *gens = sympy_ring(list(names) + [SERIES_VARIABLE], QQ)
    return base, gens[-1]


class TruncSeries:
    """coeffs[d] is the coefficient of X^d for d = 0..order."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring: PolyRing, order: int, coeffs: Sequence[MPoly] = ()):
        if order < 0:
            raise UsageError(f"Truncation order must be nonnegative, got {order}")
        coeffs = list(coeffs)[: order + 1]
        for c in coeffs:
            if c.ring != ring:
                raise UsageError(f"Coefficient ring {c.ring!r} does not match {ring!r}")
        coeffs += [ring.zero()] * (order + 1 - len(coeffs))
        self.ring = ring
        self.order = order
        self.coeffs: Tuple[MPoly, ...] = tuple(coeffs)

    @classmethod
    def one(cls, ring: PolyRing, order: int) -> "TruncSeries":
        return cls(ring, order, [ring.one()])

    @classmethod
    def monomial(cls, ring: PolyRing, order: int, degree: int, coeff: MPoly) -> "TruncSeries":
        """coeff * X^degree (zero if the degree exceeds the order)."""
        coeffs = [ring.zero()] * (order + 1)
        if degree <= order:
            coeffs[degree] = coeff
        return cls(ring, order, coeffs)

    def coefficient(self, degree: int) -> MPoly:
        return self.coeffs[degree]

    def _check(self, other: "TruncSeries"):
        if not isinstance(other, TruncSeries):
            raise UsageError(f"Expected a TruncSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise UsageError(f"Order mismatch: {self.order} vs {other.order}")
        if other.ring != self.ring:
            raise UsageError(f"Ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.ring, self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.ring, self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.ring, self.order, [-a for a in self.coeffs])

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, (MPoly, int, Fraction)):
            return TruncSeries(self.ring, self.order, [a * other for a in self.coeffs])
        self._check(other)
        result = [self.ring.zero()] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order - i + 1):
                b = other.coeffs[j]
                if not b.is_zero():
                    result[i + j] = result[i + j] + a * b
        return TruncSeries(self.ring, self.order, result)

    def __rmul__(self, other) -> "TruncSeries":
        if isinstance(other, (MPoly, int, Fraction)):
            return self * other
        return NotImplemented

    def invert(self) -> "TruncSeries":
        """
        Reciprocal of a series with constant term exactly 1.

        Negative v-powers are cleared by the substitution X -> v^lift X, the
        polynomial series is inverted by sympy, and the substitution is undone.
        """
        if self.coeffs[0] != self.ring.one():
            raise InversionError(f"Constant term must be 1, got {self.coeffs[0]}")
        if self.order == 0:
            return TruncSeries.one(self.ring, 0)
        lift = max((-(c.shift // d) for d, c in enumerate(self.coeffs) if d and c and c.shift < 0), default=0)
        base, X = _series_ring(self.ring.names)
        packed = {}
        for d, c in enumerate(self.coeffs):
            for monom, coeff in c.lifted(lift * d).items():
                packed[monom + (d,)] = coeff
        inverse = rs_series_inversion(base.from_dict(packed), X, self.order + 1)

        slot = self.ring.laurent_slot
        grouped = [{} for _ in range(self.order + 1)]
        for monom, coeff in inverse.items():
            d, exps = monom[-1], monom[:-1]
            if slot is not None and lift:
                exps = exps[:slot] + (exps[slot] - lift * d,) + exps[slot + 1:]
            grouped[d][exps] = coeff
        return TruncSeries(self.ring, self.order, [MPoly._from_terms(self.ring, terms) for terms in grouped])

    def specialize(self, assignment: Mapping[str, Scalar]) -> "TruncSeries":
        return TruncSeries(self.ring, self.order, [c.specialize(assignment) for c in self.coeffs])

    def differences(self, other: "TruncSeries") -> List[Tuple[int, MPoly]]:
        """(degree, self - other) for every degree where the coefficients differ."""
        self._check(other)
        return [(d, a - b) for d, (a, b) in enumerate(zip(self.coeffs, other.coeffs)) if a != b]

    def digest(self) -> str:
        """Short stable fingerprint of the coefficient list."""
        text = ";".join(str(c) for c in self.coeffs)
        return hashlib.sha256(f"{self.ring.names}|{self.order}|{text}".encode()).hexdigest()[:16]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.order, self.coeffs))

    def __str__(self) -> str:
        parts = []
        for d, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            body = str(c) if len(c) == 1 else f"({c})"
            parts.append(body if d == 0 else f"{body}*X^{d}")
        return (" + ".join(parts) or "0") + f" + O(X^{self.order + 1})"

    def __repr__(self) -> str:
        return f"TruncSeries({self})"


def ts_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    """Truncated add/mul."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise UsageError(f"Unknown series operation {op!r}")


def ts_invert(a: TruncSeries) -> TruncSeries:
    return a.invert()
