"""Pydantic models for cases, corpora and reports."""

from .cases import CaseSpec, CorpusDefaults, CorpusEntry, CorpusFile, Mode, PathName, resolve_path
from .reports import (
    CLAIMED_IDENTITY_CHECKS,
    CheckResult,
    CheckStatus,
    Mismatch,
    ReportDocument,
    ReportSummary,
    Status,
    VerificationReport,
    derive_status,
)

__all__ = [
    "CaseSpec",
    "CorpusDefaults",
    "CorpusEntry",
    "CorpusFile",
    "Mode",
    "PathName",
    "resolve_path",
    "CLAIMED_IDENTITY_CHECKS",
    "CheckResult",
    "CheckStatus",
    "Mismatch",
    "ReportDocument",
    "ReportSummary",
    "Status",
    "VerificationReport",
    "derive_status",
]
