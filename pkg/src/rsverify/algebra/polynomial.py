"""
Sparse multivariate polynomials with exact rational coefficients.

Arithmetic runs in a sympy ``QQ[x_1..x_r, y_1..y_m, v]`` ring. The half-power
v of q is a Laurent variable: each value keeps a polynomial part whose lowest
v-power is zero plus an integer v-shift.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, ring as sympy_ring

from ..core.errors import EvaluationError, UsageError

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]

# q^(1/2); the only variable allowed to carry negative exponents
LAURENT_VARIABLE = "v"


def to_qq(value: Scalar):
    """Rational as an element of sympy's QQ domain."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(value) -> Fraction:
    """QQ element as a Fraction."""
    return Fraction(int(value.numerator), int(value.denominator))


class PolyRing:
    """Ordered variable context shared by every polynomial of a computation."""

    def __init__(self, names: Sequence[str], laurent: Sequence[str] = (LAURENT_VARIABLE,)):
        """Create a ring over the given variable names."""
        names = tuple(names)
        if not names:
            raise UsageError("A ring needs at least one variable")
        if len(set(names)) != len(names):
            raise UsageError(f"Duplicate variable names: {names}")
        slots = [i for i, name in enumerate(names) if name in laurent]
        if len(slots) > 1:
            raise UsageError(f"At most one Laurent variable is supported, got {[names[i] for i in slots]}")
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}
        self.laurent = frozenset(slots)
        self.laurent_slot: Optional[int] = slots[0] if slots else None
        self.nvars = len(names)
        self.base, *self.base_gens = sympy_ring(list(names), QQ)
        self.domain = self.base.to_domain()

    @classmethod
    def for_case(cls, r: int, m: int) -> "PolyRing":
        """Ring with x_1..x_r, y_1..y_m and the half-power v of q."""
        names = [f"x{i + 1}" for i in range(r)] + [f"y{j + 1}" for j in range(m)]
        return cls(names + [LAURENT_VARIABLE])

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and self.names == other.names and self.laurent == other.laurent

    def __hash__(self) -> int:
        return hash((self.names, self.laurent))

    def __repr__(self) -> str:
        return f"PolyRing({', '.join(self.names)})"

    @property
    def zero_exponent(self) -> Exponent:
        return (0,) * self.nvars

    def zero(self) -> "MPoly":
        return MPoly._wrap(self, self.base.zero)

    def one(self) -> "MPoly":
        return self.const(1)

    def const(self, value: Scalar) -> "MPoly":
        """Constant polynomial."""
        return MPoly._wrap(self, self.base.ground_new(to_qq(value)))

    def gen(self, name: str) -> "MPoly":
        """The generator named ``name``."""
        return self.monomial({name: 1})

    def gens(self, names: Sequence[str]) -> List["MPoly"]:
        return [self.gen(name) for name in names]

    def monomial(self, exponents: Mapping[str, int], coeff: Scalar = 1) -> "MPoly":
        """coeff times the product of name**exponent."""
        exps = [0] * self.nvars
        for name, power in exponents.items():
            if name not in self.index:
                raise UsageError(f"Unknown variable {name!r} for {self!r}")
            exps[self.index[name]] += power
        return MPoly(self, {tuple(exps): coeff})

    def has(self, name: str) -> bool:
        return name in self.index

    def laurent_power(self, power: int) -> PolyElement:
        """v**power as a ring element; power >= 0."""
        if self.laurent_slot is None or power == 0:
            return self.base.one
        return self.base_gens[self.laurent_slot] ** power


class MPoly:
    """
    Exact polynomial, Laurent in v: ``element * v**shift``.

    Values are immutable. Exponents are nonnegative except in the Laurent slot.
    """

    __slots__ = ("ring", "element", "shift", "_hash")

    def __init__(self, ring: PolyRing, terms: Optional[Mapping[Exponent, Scalar]] = None):
        raw: Dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != ring.nvars:
                raise UsageError(f"Exponent vector {exps} does not match {ring!r}")
            for slot, power in enumerate(exps):
                if power < 0 and slot not in ring.laurent:
                    raise UsageError(f"Negative exponent for {ring.names[slot]} in {exps}")
            raw[exps] = raw.get(exps, Fraction(0)) + Fraction(coeff)
        built = MPoly._from_terms(ring, {exps: to_qq(c) for exps, c in raw.items() if c})
        self.ring = ring
        self.element = built.element
        self.shift = built.shift
        self._hash = None

    @classmethod
    def _wrap(cls, ring: PolyRing, element: PolyElement, shift: int = 0) -> "MPoly":
        """Normalize so the lowest v-power of the polynomial part is zero."""
        slot = ring.laurent_slot
        if not element:
            shift = 0
        elif slot is not None:
            low = min(monom[slot] for monom in element.itermonoms())
            if low:
                element = ring.base.from_dict(
                    {monom[:slot] + (monom[slot] - low,) + monom[slot + 1:]: coeff for monom, coeff in element.items()}
                )
                shift += low
        poly = cls.__new__(cls)
        poly.ring = ring
        poly.element = element
        poly.shift = shift
        poly._hash = None
        return poly

    @classmethod
    def _from_terms(cls, ring: PolyRing, terms: Mapping[Exponent, object]) -> "MPoly":
        """Build from exponent vectors (v-slot possibly negative) to nonzero QQ coefficients."""
        slot = ring.laurent_slot
        low = 0
        if slot is not None and terms:
            low = min(exps[slot] for exps in terms)
        if low:
            terms = {exps[:slot] + (exps[slot] - low,) + exps[slot + 1:]: c for exps, c in terms.items()}
        return cls._wrap(ring, ring.base.from_dict(dict(terms)), low)

    def lifted(self, extra: int = 0) -> PolyElement:
        """The ring element equal to ``self * v**extra``; fails if a v-power would be negative."""
        power = self.shift + extra
        if not self.element:
            return self.ring.base.zero
        if power < 0:
            raise EvaluationError(f"{self} times v^{extra} is not a polynomial")
        return self.element * self.ring.laurent_power(power)

    # -- inspection ---------------------------------------------------------

    def _exponent(self, monom: Exponent) -> Exponent:
        slot = self.ring.laurent_slot
        if slot is None or not self.shift:
            return tuple(monom)
        return monom[:slot] + (monom[slot] + self.shift,) + monom[slot + 1:]

    def terms(self) -> List[Tuple[Exponent, Fraction]]:
        """Terms in canonical (descending exponent) order."""
        return sorted(((self._exponent(m), to_fraction(c)) for m, c in self.element.items()), reverse=True)

    def __iter__(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self.element)

    def __bool__(self) -> bool:
        return bool(self.element)

    def is_zero(self) -> bool:
        return not self.element

    def is_constant(self) -> bool:
        return not self.element or (self.element.is_ground and self.shift == 0)

    def constant_term(self) -> Fraction:
        return self._coefficient_at(self.ring.zero_exponent)

    def _coefficient_at(self, exps: Exponent) -> Fraction:
        slot = self.ring.laurent_slot
        if slot is not None:
            exps = exps[:slot] + (exps[slot] - self.shift,) + exps[slot + 1:]
        if any(p < 0 for p in exps):
            return Fraction(0)
        return to_fraction(self.element.get(tuple(exps), QQ.zero))

    def coefficient(self, exponents: Mapping[str, int]) -> Fraction:
        """Coefficient of a single monomial."""
        exps = [0] * self.ring.nvars
        for name, power in exponents.items():
            exps[self.ring.index[name]] = power
        return self._coefficient_at(tuple(exps))

    def degree(self, name: str) -> int:
        """Largest exponent of ``name``; -1 for the zero polynomial."""
        slot = self.ring.index[name]
        return max((exps[slot] for exps, _ in self.terms()), default=-1)

    def is_unit_monomial(self) -> bool:
        """Nonzero constant times a power of v."""
        return bool(self.element) and self.element.is_ground

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise UsageError(f"Ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.element:
            return self
        if not self.element:
            return other
        low = min(self.shift, other.shift)
        total = self.lifted(-low) + other.lifted(-low)
        return MPoly._wrap(self.ring, total, low)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._wrap(self.ring, -self.element, self.shift)

    def __sub__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "MPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return MPoly._wrap(self.ring, self.element * other.element, self.shift + other.shift)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "MPoly":
        if not isinstance(power, int):
            raise UsageError(f"Integer powers only, got {power!r}")
        if power < 0:
            return self.inverse() ** (-power)
        if power == 0:
            return self.ring.one()
        return MPoly._wrap(self.ring, self.element ** power, self.shift * power)

    def inverse(self) -> "MPoly":
        """Inverse of a unit monomial c*v^e."""
        if not self.is_unit_monomial():
            raise EvaluationError(f"{self} is not invertible in the polynomial ring")
        return self.ring.const(1 / self.constant_coefficient()).times_v(-self.shift)

    def constant_coefficient(self) -> Fraction:
        """Coefficient of the polynomial part at exponent zero."""
        return to_fraction(self.element.get(self.ring.base.zero_monom, QQ.zero))

    def times_v(self, power: int) -> "MPoly":
        """Multiply by v**power."""
        if power == 0:
            return self
        if self.ring.laurent_slot is None:
            raise UsageError(f"{self.ring!r} has no Laurent variable")
        return MPoly._wrap(self.ring, self.element, self.shift + power)

    def scale(self, factor: Scalar) -> "MPoly":
        return MPoly._wrap(self.ring, self.element.mul_ground(to_qq(factor)), self.shift)

    def divide_monomial(self, exponents: Mapping[str, int]) -> "MPoly":
        """Exact division by a monomial; fails if a non-Laurent exponent would turn negative."""
        divisor = [0] * self.ring.nvars
        for name, power in exponents.items():
            divisor[self.ring.index[name]] = power
        result = {}
        for monom, coeff in self.element.items():
            new = tuple(e - d for e, d in zip(self._exponent(monom), divisor))
            if any(p < 0 and slot not in self.ring.laurent for slot, p in enumerate(new)):
                raise UsageError(f"{self} is not divisible by the monomial {dict(exponents)}")
            result[new] = coeff
        return MPoly._from_terms(self.ring, result)

    # -- evaluation ---------------------------------------------------------

    def specialize(self, assignment: Mapping[str, Scalar]) -> "MPoly":
        """Substitute rationals for some variables; the ring is unchanged."""
        element, shift = self.element, self.shift
        for name, value in assignment.items():
            if name not in self.ring.index:
                raise UsageError(f"Unknown variable {name!r} for {self.ring!r}")
            slot = self.ring.index[name]
            value = Fraction(value)
            element = element.subs(self.ring.base_gens[slot], to_qq(value))
            if slot == self.ring.laurent_slot and element and shift:
                if value == 0 and shift < 0:
                    raise EvaluationError(f"Division by zero: {name} -> 0 with exponent {shift}")
                element = element.mul_ground(to_qq(value ** shift))
                shift = 0
        return MPoly._wrap(self.ring, element, shift)

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Total evaluation; every variable that occurs must be assigned."""
        reduced = self.specialize(assignment)
        if not reduced.is_constant():
            missing = [name for name in self.ring.names if name not in assignment and reduced.degree(name) != 0]
            raise UsageError(f"Unassigned variables in evaluation: {missing}")
        return reduced.constant_term()

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.ring == other.ring and self.shift == other.shift and self.element == other.element

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                # agrees with hash(int) and hash(Fraction) for equal constants
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self.ring, self.shift, frozenset(self.element.items())))
        return self._hash

    def __str__(self) -> str:
        if not self.element:
            return "0"
        pieces = []
        for exps, coeff in self.terms():
            factors = []
            for name, power in zip(self.ring.names, exps):
                if power == 1:
                    factors.append(name)
                elif power:
                    factors.append(f"{name}^{power}")
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MPoly({self})"


def determinant(matrix: Sequence[Sequence[MPoly]], ring: PolyRing) -> MPoly:
    """
    Determinant of a square matrix of polynomials.

    Entries are moved to a common v-power so the determinant is taken in the
    polynomial ring by sympy's fraction-free elimination.
    """
    size = len(matrix)
    if size == 0:
        return ring.one()
    if any(len(row) != size for row in matrix):
        raise UsageError(f"Determinant of a non-square {size}-row matrix")
    low = min((entry.shift for row in matrix for entry in row if entry), default=0)
    rows = [[entry.lifted(-low) for entry in row] for row in matrix]
    value = DomainMatrix(rows, (size, size), ring.domain).det()
    return MPoly._wrap(ring, value, low * size)


def mp_arith(a: MPoly, b: MPoly, op: str) -> MPoly:
    """Exact add/sub/mul of two polynomials over the same ring."""
    if a.ring != b.ring:
        raise UsageError(f"Ring mismatch: {a.ring!r} vs {b.ring!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UsageError(f"Unknown polynomial operation {op!r}")
