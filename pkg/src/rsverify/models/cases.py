"""Case and corpus models."""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from ..core.errors import UsageError


class Mode(str, Enum):
    """Parameter mode of a computation."""
    SYMBOLIC = "symbolic"
    SPECIALIZED = "specialized"


class PathName(str, Enum):
    """Evaluation route for a zeta-integral case, plus the two check suites."""
    AUTO = "auto"
    JPSS = "jpss"
    RANK1 = "rank1"
    CHAIN = "chain"
    IDENTITIES = "identities"
    STRUCTURE = "structure"


SUPPORTED_PATHS = (
    "jpss: n=1 and r<m; "
    "rank1: r=1 and nm>1; "
    "chain: nm>1 (any r)"
)


def resolve_path(r: int, m: int, n: int, path: PathName) -> PathName:
    """
    Concrete evaluation route for (r, m, n).

    ``auto`` picks jpss for n=1, rank1 for r=1, the chain otherwise.
    """
    path = PathName(path)
    if path in (PathName.IDENTITIES, PathName.STRUCTURE):
        return path
    if path == PathName.AUTO:
        if n == 1:
            path = PathName.JPSS
        elif r == 1:
            path = PathName.RANK1
        else:
            path = PathName.CHAIN

    if path == PathName.JPSS and not (n == 1 and r < m):
        raise UsageError(f"Unsupported case (r,m,n)=({r},{m},{n}) for path jpss; supported: {SUPPORTED_PATHS}")
    if path == PathName.RANK1 and not (r == 1 and n * m > 1):
        raise UsageError(f"Unsupported case (r,m,n)=({r},{m},{n}) for path rank1; supported: {SUPPORTED_PATHS}")
    if path == PathName.CHAIN and not n * m > 1:
        raise UsageError(f"Unsupported case (r,m,n)=({r},{m},{n}) for path chain; supported: {SUPPORTED_PATHS}")
    return path


class CaseSpec(BaseModel):
    """One verification case."""

    r: int = Field(..., ge=1, description="Rank of the covering group GL_r")
    m: int = Field(..., ge=1, description="m in the Speh-type representation on GL_nm")
    n: int = Field(1, ge=1, description="Degree of the cover")
    order: int = Field(6, ge=0, description="Truncation order D in X = q^-s")
    mode: Mode = Field(Mode.SYMBOLIC, description="Parameter mode")
    seed: int = Field(0, description="Seed for specialized parameters")
    path: PathName = Field(PathName.AUTO, description="Evaluation route")

    @model_validator(mode="after")
    def _check_path(self) -> "CaseSpec":
        resolve_path(self.r, self.m, self.n, self.path)
        return self

    def resolved_path(self) -> PathName:
        return resolve_path(self.r, self.m, self.n, self.path)

    def label(self) -> str:
        return f"(r,m,n)=({self.r},{self.m},{self.n}) D={self.order}"


class CorpusDefaults(BaseModel):
    """Values applied to corpus cases that leave them out."""

    order: int = Field(6, ge=0, description="Default truncation order")
    mode: Mode = Field(Mode.SYMBOLIC, description="Default parameter mode")
    seed: int = Field(0, description="Default seed")


class CorpusEntry(BaseModel):
    """A corpus case as written in the file; missing fields come from the defaults."""

    r: int
    m: int
    n: int = 1
    order: Optional[int] = None
    mode: Optional[Mode] = None
    seed: Optional[int] = None
    path: PathName = PathName.AUTO


class CorpusFile(BaseModel):
    """A corpus of verification cases."""

    defaults: CorpusDefaults = Field(default_factory=CorpusDefaults, description="Case defaults")
    cases: List[CorpusEntry] = Field(default_factory=list, description="Case records")

    def case_specs(self) -> List[CaseSpec]:
        """Every case with defaults applied; all are validated before any is returned."""
        specs = []
        for entry in self.cases:
            specs.append(
                CaseSpec(
                    r=entry.r,
                    m=entry.m,
                    n=entry.n,
                    order=self.defaults.order if entry.order is None else entry.order,
                    mode=self.defaults.mode if entry.mode is None else entry.mode,
                    seed=self.defaults.seed if entry.seed is None else entry.seed,
                    path=entry.path,
                )
            )
        return specs
