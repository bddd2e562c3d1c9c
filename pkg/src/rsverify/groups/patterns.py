"""
Coordinate pattern groups inside GL_nrm.

A unipotent subgroup is recorded only by the matrix positions it occupies,
together with the positions on which the additive character is evaluated.
All positions are 0-based (row, col).
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, FrozenSet, Iterator, List, Tuple

from ..core.errors import StructureError, UsageError
from .cochar import PermMat, build_w0

logger = logging.getLogger(__name__)

Coord = Tuple[int, int]


@dataclass(frozen=True)
class CoordSet:
    """Off-diagonal positions of GL_ambient, with the character support as a subset."""

    ambient: int
    coords: FrozenSet[Coord]
    charsupp: FrozenSet[Coord] = field(default_factory=frozenset)

    def __post_init__(self):
        coords = frozenset(self.coords)
        charsupp = frozenset(self.charsupp)
        for i, j in coords:
            if not (0 <= i < self.ambient and 0 <= j < self.ambient):
                raise UsageError(f"Coordinate {(i, j)} outside GL_{self.ambient}")
            if i == j:
                raise UsageError(f"Diagonal coordinate {(i, j)} in a unipotent pattern")
        if not charsupp <= coords:
            raise UsageError(f"Character support not contained in the pattern: {sorted(charsupp - coords)}")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "charsupp", charsupp)

    def __len__(self) -> int:
        return len(self.coords)

    def __contains__(self, coord: Coord) -> bool:
        return coord in self.coords

    def __iter__(self) -> Iterator[Coord]:
        return iter(sorted(self.coords))

    def is_upper(self) -> bool:
        return all(i < j for i, j in self.coords)

    def restrict(self, keep: Callable[[Coord], bool]) -> "CoordSet":
        """Sub-pattern of the positions satisfying ``keep``."""
        coords = frozenset(c for c in self.coords if keep(c))
        return CoordSet(self.ambient, coords, self.charsupp & coords)

    def conjugate(self, w: PermMat) -> "CoordSet":
        """Positions of w U w^-1."""
        if w.size != self.ambient:
            raise UsageError(f"Size mismatch: permutation {w.size}, pattern {self.ambient}")
        return CoordSet(
            self.ambient,
            frozenset(w.conj_coord(c) for c in self.coords),
            frozenset(w.conj_coord(c) for c in self.charsupp),
        )


@dataclass(frozen=True)
class PatternGroups:
    """U_{nm,r} and the subgroups used by the unfolding, for one (n, m, r)."""

    n: int
    m: int
    r: int
    U: CoordSet
    U0: CoordSet
    U1: CoordSet
    U2: CoordSet
    U3: CoordSet
    conjugated_U1: CoordSet

    @property
    def nm(self) -> int:
        return self.n * self.m

    @property
    def ambient(self) -> int:
        return self.n * self.m * self.r


def _unipotent_radical(nm: int, r: int) -> CoordSet:
    """(mat1): nm x nm blocks of size r, strictly block-upper; trace character on X_{I,I+1}."""
    size = nm * r
    coords = set()
    charsupp = set()
    for I in range(nm):
        for J in range(I + 1, nm):
            for l1 in range(r):
                for l2 in range(r):
                    coord = (I * r + l1, J * r + l2)
                    coords.add(coord)
                    if J == I + 1 and l1 == l2:
                        charsupp.add(coord)
    return CoordSet(size, frozenset(coords), frozenset(charsupp))


def _block_of(index: int, block: int) -> Tuple[int, int]:
    """(block number, offset) of an index in blocks of the given size."""
    return divmod(index, block)


def _diagonal_unipotents(nm: int, r: int) -> CoordSet:
    """r copies of V_nm on the diagonal, with their Whittaker characters."""
    coords = set()
    charsupp = set()
    for L in range(r):
        base = L * nm
        for a in range(nm):
            for b in range(a + 1, nm):
                coords.add((base + a, base + b))
                if b == a + 1:
                    charsupp.add((base + a, base + b))
    return CoordSet(nm * r, frozenset(coords), frozenset(charsupp))


def build_patterns(n: int, m: int, r: int) -> PatternGroups:
    """Build U, U^0, U^1, U^2, U^3 for GL_nrm; U^3 is the w0-image of U^1 minus U^2."""
    if min(n, m, r) < 1:
        raise UsageError(f"n, m, r must be positive, got n={n}, m={m}, r={r}")
    nm = n * m
    U = _unipotent_radical(nm, r)

    def in_mat0(coord: Coord) -> bool:
        # X[l1, l2] = 0 for l1 < l2
        (_, l1), (_, l2) = _block_of(coord[0], r), _block_of(coord[1], r)
        return l1 >= l2

    U0 = U.restrict(in_mat0)

    def in_u1(coord: Coord) -> bool:
        (I, l1), (J, l2) = _block_of(coord[0], r), _block_of(coord[1], r)
        return not (I == 0 and J == 1 and l1 != l2)

    U1 = U0.restrict(in_u1)
    U2 = _diagonal_unipotents(nm, r)

    w0 = build_w0(n, m, r)
    conjugated = U1.conjugate(w0)
    for coord in conjugated:
        if coord in U2:
            continue
        (L1, i), (L2, j) = _block_of(coord[0], nm), _block_of(coord[1], nm)
        if not (L1 > L2 and i < j):
            raise StructureError(
                f"w0-conjugate {coord} of a U^1 coordinate is neither in U^2 nor block-lower "
                f"for (n,m,r)=({n},{m},{r})"
            )
    U3 = CoordSet(nm * r, conjugated.coords - U2.coords)
    logger.debug(f"Patterns for (n,m,r)=({n},{m},{r}): |U|={len(U)} |U1|={len(U1)} |U2|={len(U2)} |U3|={len(U3)}")
    return PatternGroups(n=n, m=m, r=r, U=U, U0=U0, U1=U1, U2=U2, U3=U3, conjugated_U1=conjugated)


def u3_expected_coords(n: int, m: int, r: int) -> FrozenSet[Coord]:
    """Blocks Y_{L1,L2} with L1 > L2 and entries Y[i,j], i < j, excluding Y[1,2]."""
    nm = n * m
    coords = set()
    for L1 in range(r):
        for L2 in range(L1):
            for i in range(nm):
                for j in range(i + 1, nm):
                    if (i, j) == (0, 1):
                        continue
                    coords.add((L1 * nm + i, L2 * nm + j))
    return frozenset(coords)


def check_u3_constraints(patterns: PatternGroups) -> List[str]:
    """Disagreements between the constructed U^3 and the stated block/entry constraints."""
    expected = u3_expected_coords(patterns.n, patterns.m, patterns.r)
    actual = patterns.U3.coords
    problems = []
    missing = sorted(expected - actual)
    extra = sorted(actual - expected)
    if missing:
        problems.append(f"{len(missing)} expected U^3 positions not produced, first {missing[0]}")
    if extra:
        problems.append(f"{len(extra)} U^3 positions outside the stated constraints, first {extra[0]}")
    return problems
