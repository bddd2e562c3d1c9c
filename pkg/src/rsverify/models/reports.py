"""Report models: per-check results, per-case reports and the report document."""

import hashlib
import json
from enum import Enum
from typing import Iterable, List, Optional

from pydantic import BaseModel, Field, model_validator

from .cases import Mode, PathName


class Status(str, Enum):
    """Outcome of a case."""
    EQUAL = "EQUAL"
    MISMATCH = "MISMATCH"
    PAPER_DISCREPANCY = "PAPER_DISCREPANCY"
    ERROR = "ERROR"


class CheckStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


# Checks that re-derive a displayed intermediate identity; a failure is a
# discrepancy with the display, not a defect of the engine.
CLAIMED_IDENTITY_CHECKS = frozenset({
    "u3_measure_alpha",
    "exponent_collapse",
    "levi_convention",
    "u3_constraints",
    "scalar_twist",
    "scalar_untwist",
})


class CheckResult(BaseModel):
    """A named PASS/FAIL entry."""

    name: str = Field(..., description="Check name")
    status: CheckStatus = Field(..., description="PASS or FAIL")
    detail: str = Field("", description="What was compared, or the computed correction")

    @classmethod
    def of(cls, name: str, ok: bool, detail: str = "") -> "CheckResult":
        return cls(name=name, status=CheckStatus.PASS if ok else CheckStatus.FAIL, detail=detail)

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    @property
    def is_claimed_identity(self) -> bool:
        return self.name in CLAIMED_IDENTITY_CHECKS


class Mismatch(BaseModel):
    """A differing X-degree and the coefficient difference (lhs - rhs)."""

    degree: int = Field(..., ge=0, description="Power of X")
    diff: str = Field(..., description="Coefficient difference, rendered")


def derive_status(mismatches: List[Mismatch], checks: Iterable[CheckResult], error: bool = False) -> Status:
    """ERROR, then MISMATCH, then failed build checks (ERROR), then failed claimed identities."""
    checks = list(checks)
    if error:
        return Status.ERROR
    if mismatches:
        return Status.MISMATCH
    if any(not c.passed and not c.is_claimed_identity for c in checks):
        return Status.ERROR
    if any(not c.passed for c in checks):
        return Status.PAPER_DISCREPANCY
    return Status.EQUAL


class VerificationReport(BaseModel):
    """Result of one case."""

    r: int = Field(..., description="r")
    m: int = Field(..., description="m")
    n: int = Field(..., description="n")
    order: int = Field(..., description="Truncation order")
    mode: Mode = Field(Mode.SYMBOLIC, description="Parameter mode")
    path: PathName = Field(..., description="Route actually taken")
    status: Status = Field(..., description="Case outcome")
    mismatches: List[Mismatch] = Field(default_factory=list, description="Differing degrees")
    intermediate_checks: List[CheckResult] = Field(default_factory=list, description="Named checks")
    millis: int = Field(0, ge=0, description="Wall time in milliseconds")
    lhs_digest: Optional[str] = Field(None, description="Fingerprint of the integral side")
    rhs_digest: Optional[str] = Field(None, description="Fingerprint of the L-function side")
    error: Optional[str] = Field(None, description="Diagnostic for ERROR cases")

    @model_validator(mode="after")
    def _check_status(self) -> "VerificationReport":
        if (self.status == Status.MISMATCH) != bool(self.mismatches):
            raise ValueError(f"Status {self.status.value} inconsistent with {len(self.mismatches)} mismatches")
        return self

    def label(self) -> str:
        return f"{self.path.value} (r,m,n)=({self.r},{self.m},{self.n}) D={self.order}"


class ReportSummary(BaseModel):
    """Counts per status."""

    equal: int = Field(0, ge=0)
    mismatch: int = Field(0, ge=0)
    paper_discrepancy: int = Field(0, ge=0)
    error: int = Field(0, ge=0)

    @classmethod
    def tally(cls, cases: Iterable[VerificationReport]) -> "ReportSummary":
        counts = {status: 0 for status in Status}
        for case in cases:
            counts[case.status] += 1
        return cls(
            equal=counts[Status.EQUAL],
            mismatch=counts[Status.MISMATCH],
            paper_discrepancy=counts[Status.PAPER_DISCREPANCY],
            error=counts[Status.ERROR],
        )

    @property
    def failed(self) -> bool:
        return bool(self.mismatch or self.error)


class ReportDocument(BaseModel):
    """Full report of a verification run."""

    version: str = Field(..., description="Engine version")
    corpus_digest: Optional[str] = Field(None, description="SHA-256 of the corpus file, if any")
    cases: List[VerificationReport] = Field(default_factory=list, description="Per-case reports")
    summary: ReportSummary = Field(default_factory=ReportSummary, description="Status counts")
    payload_digest: Optional[str] = Field(None, description="SHA-256 of the report with timings removed")

    @model_validator(mode="after")
    def _check_summary(self) -> "ReportDocument":
        if self.summary != ReportSummary.tally(self.cases):
            raise ValueError(f"Summary {self.summary.model_dump()} does not match the case tally")
        return self

    @classmethod
    def build(cls, version: str, cases: List[VerificationReport], corpus_digest: Optional[str] = None) -> "ReportDocument":
        doc = cls(version=version, corpus_digest=corpus_digest, cases=cases, summary=ReportSummary.tally(cases))
        return doc.model_copy(update={"payload_digest": doc.compute_payload_digest()})

    def compute_payload_digest(self) -> str:
        """Digest over everything except timings and the digest itself."""
        payload = self.model_dump(mode="json", exclude={"payload_digest"})
        for case in payload["cases"]:
            case.pop("millis", None)
        text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(text.encode()).hexdigest()
