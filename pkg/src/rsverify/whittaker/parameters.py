"""Satake parameters of a case, symbolic or specialized to random rationals."""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Union

from ..algebra.polynomial import LAURENT_VARIABLE, MPoly, PolyRing
from ..algebra.series import TruncSeries
from ..core.errors import UsageError
from ..models.cases import Mode

logger = logging.getLogger(__name__)

# numerators and denominators of specialized values are drawn from 1..MAX_ENTRY
MAX_ENTRY = 9


@dataclass(frozen=True)
class SatakeParams:
    """Parameters of an unramified representation of GL_group_rank (or its n-fold cover)."""

    group_rank: int
    cover_degree: int
    vars: List[MPoly]

    def __post_init__(self):
        if len(self.vars) != self.group_rank:
            raise UsageError(f"{len(self.vars)} parameters for GL_{self.group_rank}")
        if self.cover_degree < 1:
            raise UsageError(f"Cover degree must be >= 1, got {self.cover_degree}")

    @property
    def ring(self) -> PolyRing:
        return self.vars[0].ring

    def powered(self) -> List[MPoly]:
        """The n-th powers of the parameters."""
        return [z ** self.cover_degree for z in self.vars]


class ParameterSpace:
    """
    x_1..x_r, y_1..y_m and v for one case.

    In symbolic mode these are the ring generators. In specialized mode they
    are seeded random nonzero rationals (constants of the same ring), and
    ``assignment`` maps each name to its value.
    """

    def __init__(self, r: int, m: int, mode: Union[Mode, str] = Mode.SYMBOLIC, seed: int = 0):
        self.r = r
        self.m = m
        self.mode = Mode(mode)
        self.seed = seed
        self.ring = PolyRing.for_case(r, m)
        self.assignment: Dict[str, Fraction] = {}

        if self.mode == Mode.SYMBOLIC:
            self.x = self.ring.gens([f"x{i + 1}" for i in range(r)])
            self.y = self.ring.gens([f"y{j + 1}" for j in range(m)])
            self.v = self.ring.gen(LAURENT_VARIABLE)
        else:
            rng = random.Random(seed)
            for name in self.ring.names:
                self.assignment[name] = self._draw(rng, positive=name == LAURENT_VARIABLE)
            self.x = [self.ring.const(self.assignment[f"x{i + 1}"]) for i in range(r)]
            self.y = [self.ring.const(self.assignment[f"y{j + 1}"]) for j in range(m)]
            self.v = self.ring.const(self.assignment[LAURENT_VARIABLE])
            logger.debug(f"Specialized parameters (seed {seed}): {self.assignment}")

    @staticmethod
    def _draw(rng: random.Random, positive: bool = False) -> Fraction:
        value = Fraction(rng.randint(1, MAX_ENTRY), rng.randint(1, MAX_ENTRY))
        if not positive and rng.random() < 0.5:
            value = -value
        return value

    @property
    def symbolic(self) -> bool:
        return self.mode == Mode.SYMBOLIC

    def v_power(self, exponent: int) -> MPoly:
        """v^exponent = q^(exponent/2)."""
        return self.v ** exponent

    def x_params(self, cover_degree: int = 1) -> SatakeParams:
        return SatakeParams(self.r, cover_degree, list(self.x))

    def y_params(self, cover_degree: int = 1) -> SatakeParams:
        return SatakeParams(self.m, cover_degree, list(self.y))

    def specialize(self, series: TruncSeries) -> TruncSeries:
        """A symbolic series evaluated at this space's assignment."""
        if self.symbolic:
            raise UsageError("A symbolic parameter space has no assignment")
        return series.specialize(self.assignment)

    def __repr__(self) -> str:
        return f"ParameterSpace(r={self.r}, m={self.m}, mode={self.mode.value}, seed={self.seed})"
