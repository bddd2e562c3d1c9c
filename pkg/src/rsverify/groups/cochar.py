"""Torus cocharacters and permutation (Weyl) matrices of GL_N."""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Set, Tuple

from ..core.errors import StructureError, UsageError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cochar:
    """Valuation vector: Cochar((k_1,..,k_N)) encodes diag(p^k_1, .., p^k_N)."""

    vals: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vals", tuple(int(k) for k in self.vals))

    @classmethod
    def zero(cls, size: int) -> "Cochar":
        return cls((0,) * size)

    @property
    def size(self) -> int:
        return len(self.vals)

    def total(self) -> int:
        """Valuation of the determinant."""
        return sum(self.vals)

    def padded(self, size: int) -> "Cochar":
        """diag(t, I): the cocharacter extended by zeros."""
        if size < self.size:
            raise UsageError(f"Cannot pad a rank {self.size} cocharacter to {size}")
        return Cochar(self.vals + (0,) * (size - self.size))

    def scaled(self, factor: int) -> "Cochar":
        return Cochar(tuple(factor * k for k in self.vals))

    def is_dominant(self) -> bool:
        return all(self.vals[i] >= self.vals[i + 1] for i in range(self.size - 1))

    def __add__(self, other: "Cochar") -> "Cochar":
        if other.size != self.size:
            raise UsageError(f"Size mismatch: {self.size} vs {other.size}")
        return Cochar(tuple(a + b for a, b in zip(self.vals, other.vals)))

    def __iter__(self):
        return iter(self.vals)

    def __getitem__(self, index: int) -> int:
        return self.vals[index]


@dataclass(frozen=True)
class PermMat:
    """
    Permutation matrix with a one at (perm[j], j) for every column j (0-based).

    Equivalently w e_j = e_{perm[j]}, so w diag(c) w^-1 carries c[j] to slot perm[j].
    """

    perm: Tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(i) for i in self.perm)
        if sorted(perm) != list(range(len(perm))):
            raise StructureError(f"Not a permutation of 0..{len(perm) - 1}: {perm}")
        object.__setattr__(self, "perm", perm)

    @classmethod
    def identity(cls, size: int) -> "PermMat":
        return cls(tuple(range(size)))

    @property
    def size(self) -> int:
        return len(self.perm)

    def inverse(self) -> "PermMat":
        inv = [0] * self.size
        for col, row in enumerate(self.perm):
            inv[row] = col
        return PermMat(tuple(inv))

    def compose(self, other: "PermMat") -> "PermMat":
        """The product self * other (apply other first)."""
        if other.size != self.size:
            raise UsageError(f"Size mismatch: {self.size} vs {other.size}")
        return PermMat(tuple(self.perm[other.perm[j]] for j in range(self.size)))

    def entries(self) -> Set[Tuple[int, int]]:
        """Positions (row, col) of the ones."""
        return {(row, col) for col, row in enumerate(self.perm)}

    def conj_coord(self, coord: Tuple[int, int]) -> Tuple[int, int]:
        """w E_ij w^-1 = E_{perm[i], perm[j]}."""
        i, j = coord
        return self.perm[i], self.perm[j]

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))


def _check_sizes(n: int, m: int, r: int):
    if min(n, m, r) < 1:
        raise UsageError(f"n, m, r must be positive, got n={n}, m={m}, r={r}")


def build_wJ(n: int, m: int, r: int) -> PermMat:
    """diag(J_nm, .., J_nm) with r antidiagonal blocks."""
    _check_sizes(n, m, r)
    block = n * m
    perm = []
    for b in range(r):
        for j in range(block):
            perm.append(b * block + (block - 1 - j))
    return PermMat(tuple(perm))


def build_w0(n: int, m: int, r: int) -> PermMat:
    """The Weyl element with a one at (a + b*nm, (a-1)*r + b + 1), 1 <= a <= nm, 0 <= b <= r-1."""
    _check_sizes(n, m, r)
    nm = n * m
    size = nm * r
    perm: List[int] = [-1] * size
    for a in range(1, nm + 1):
        for b in range(r):
            row = a + b * nm
            col = (a - 1) * r + b + 1
            if perm[col - 1] != -1:
                raise StructureError(f"Column {col} receives two entries for (n,m,r)=({n},{m},{r})")
            perm[col - 1] = row - 1
    if -1 in perm or len(set(perm)) != size:
        raise StructureError(f"w0 rule is not a bijection for (n,m,r)=({n},{m},{r})")
    return PermMat(tuple(perm))


def conj_cochar(w: PermMat, c: Cochar) -> Cochar:
    """Valuations of w diag(p^c) w^-1."""
    if w.size != c.size:
        raise UsageError(f"Size mismatch: permutation {w.size}, cocharacter {c.size}")
    vals = [0] * c.size
    for j, k in enumerate(c.vals):
        vals[w.perm[j]] = k
    return Cochar(tuple(vals))


def t0_positions(n: int, m: int, r: int) -> Tuple[int, ...]:
    """Slots of w0 t0 w0^-1 holding a_1..a_r, where t0 = diag(a_1..a_r, I)."""
    w0 = build_w0(n, m, r)
    return tuple(w0.perm[i] for i in range(r))


def embed_torus(c: Sequence[int], n: int, m: int, r: int) -> Cochar:
    """w0 t0 w0^-1 for t = diag(p^c)."""
    return conj_cochar(build_w0(n, m, r), Cochar(tuple(c)).padded(n * m * r))
