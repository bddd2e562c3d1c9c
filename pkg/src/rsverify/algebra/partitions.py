"""Integer partitions and the bounded enumerations used by the torus sums."""

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from ..core.errors import UsageError


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of nonnegative integers; trailing zeros are dropped."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for i, p in enumerate(parts):
            if p < 0:
                raise UsageError(f"Negative part in partition {parts}")
            if i + 1 < len(parts) and parts[i + 1] > p:
                raise UsageError(f"Parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts (rows of the Young diagram)."""
        return len(self.parts)

    def padded(self, size: int) -> Tuple[int, ...]:
        """Parts extended by zeros to ``size`` entries."""
        if self.length > size:
            raise UsageError(f"{self} has more than {size} rows")
        return self.parts + (0,) * (size - self.length)

    def cells(self) -> Iterator[Tuple[int, int]]:
        """Young diagram cells (row, col), row-major."""
        for row, length in enumerate(self.parts):
            for col in range(length):
                yield row, col

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions(weight: int, max_rows: Optional[int] = None, max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of ``weight`` with bounded rows and part size, largest first."""
    if weight < 0:
        return
    max_part = weight if max_part is None else min(max_part, weight)

    def build(remaining: int, cap: int, rows_left: Optional[int]) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(cap, remaining), 0, -1):
            next_rows = None if rows_left is None else rows_left - 1
            for rest in build(remaining - first, first, next_rows):
                yield (first,) + rest

    for parts in build(weight, max_part, max_rows):
        yield Partition(parts)


def partitions_up_to(total: int, max_rows: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of every weight 0..total."""
    for weight in range(total + 1):
        yield from partitions(weight, max_rows=max_rows)


def compositions_up_to(length: int, total: int) -> Iterator[Tuple[int, ...]]:
    """Nonnegative integer vectors of the given length with coordinate sum <= total."""
    if length == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in compositions_up_to(length - 1, total - first):
            yield (first,) + rest
