"""
Exponent functionals on the diagonal torus.

An ExpChar with weights w records the character
    diag(p^c_1, .., p^c_N) -> prod |p^c_i|^w_i = q^(-sum w_i c_i).
Weights are half-integers, stored doubled so that all arithmetic stays in ints.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from ..core.errors import ExponentError, UsageError
from .cochar import Cochar
from .patterns import CoordSet

logger = logging.getLogger(__name__)

Weight = Union[int, Fraction]


@dataclass(frozen=True)
class ExpChar:
    """Linear functional Cochar -> (1/2)Z, doubled[i] = 2 * weight of coordinate i."""

    doubled: Tuple[int, ...]

    @classmethod
    def from_weights(cls, weights: Sequence[Weight]) -> "ExpChar":
        doubled = []
        for w in weights:
            twice = 2 * Fraction(w)
            if twice.denominator != 1:
                raise ExponentError(f"Weight {w} is not a half-integer (weights {list(weights)})")
            doubled.append(int(twice))
        return cls(tuple(doubled))

    @classmethod
    def trivial(cls, size: int) -> "ExpChar":
        return cls((0,) * size)

    @classmethod
    def uniform(cls, size: int, weight: Weight) -> "ExpChar":
        """|det|^weight."""
        return cls.from_weights([weight] * size)

    @property
    def size(self) -> int:
        return len(self.doubled)

    def weights(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled)

    def scaled_weights(self, factor: Weight) -> Tuple[Fraction, ...]:
        """Exact weights of the power ``factor``; no integrality requirement."""
        factor = Fraction(factor)
        return tuple(w * factor for w in self.weights())

    def scale(self, factor: Weight) -> "ExpChar":
        """The character raised to ``factor``; the result must stay half-integral."""
        return ExpChar.from_weights(self.scaled_weights(factor))

    def __add__(self, other: "ExpChar") -> "ExpChar":
        if other.size != self.size:
            raise UsageError(f"Size mismatch: {self.size} vs {other.size}")
        return ExpChar(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "ExpChar":
        return ExpChar(tuple(-d for d in self.doubled))

    def __sub__(self, other: "ExpChar") -> "ExpChar":
        return self + (-other)

    def pullback(self, positions: Sequence[int]) -> "ExpChar":
        """Restriction along the embedding sending coordinate k to slot positions[k]."""
        return ExpChar(tuple(self.doubled[p] for p in positions))

    def q_exponent(self, c: Cochar) -> Fraction:
        """Exponent of q in the value at p^c."""
        return Fraction(self.v_exponent(c), 2)

    def v_exponent(self, c: Cochar) -> int:
        """Exponent of v = q^(1/2) in the value at p^c."""
        if c.size != self.size:
            raise UsageError(f"Size mismatch: functional {self.size}, cocharacter {c.size}")
        return -sum(d * k for d, k in zip(self.doubled, c.vals))


def delta_parabolic(levi_blocks: Sequence[int], size: int = None) -> ExpChar:
    """
    Modular character of the standard parabolic with the given Levi block sizes.

    A coordinate in block b gets weight sum(sizes after b) - sum(sizes before b).
    """
    blocks = [int(b) for b in levi_blocks]
    if any(b <= 0 for b in blocks):
        raise UsageError(f"Levi block sizes must be positive: {blocks}")
    if size is not None and sum(blocks) != size:
        raise UsageError(f"Blocks {blocks} do not partition {size}")
    weights = []
    before = 0
    total = sum(blocks)
    for b in blocks:
        after = total - before - b
        weights.extend([after - before] * b)
        before += b
    return ExpChar.from_weights(weights)


def delta_borel(size: int) -> ExpChar:
    """delta_B of GL_size in closed form: weight N - 2i + 1 on coordinate i (1-based)."""
    return ExpChar.from_weights([size - 2 * i + 1 for i in range(1, size + 1)])


def conj_measure_factor(coords: CoordSet) -> ExpChar:
    """prod over (i, j) of |d_i / d_j|: the Jacobian of u -> d u d^-1 on the pattern."""
    doubled = [0] * coords.ambient
    for i, j in coords.coords:
        doubled[i] += 2
        doubled[j] -= 2
    return ExpChar(tuple(doubled))


def alpha_closed_form(n: int, m: int, r: int) -> ExpChar:
    """alpha(t) = (|a_2| |a_3|^2 .. |a_r|^(r-1))^(nm-2), on the r torus coordinates."""
    return ExpChar.from_weights([i * (n * m - 2) for i in range(r)])
