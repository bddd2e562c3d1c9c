"""Workflow orchestration for verification runs."""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from .. import __version__
from ..models.cases import CaseSpec
from ..models.reports import ReportDocument, Status, VerificationReport
from ..zeta.verify import run_identity_suite, run_structure_suite, verify_case
from .errors import UsageError

logger = logging.getLogger(__name__)

SUITES = ("theorem1", "identities", "structure", "all")

# higher is worse; a case regresses when its rank goes up against the baseline
STATUS_RANK = {
    Status.EQUAL: 0,
    Status.PAPER_DISCREPANCY: 1,
    Status.MISMATCH: 2,
    Status.ERROR: 3,
}

CaseKey = Tuple[str, int, int, int, int, str]


def case_key(report: VerificationReport) -> CaseKey:
    return (report.path.value, report.r, report.m, report.n, report.order, report.mode.value)


class VerificationWorkflow:
    """Runs the requested suites and assembles the report document."""

    def __init__(self, config):
        """Initialize the workflow."""
        self.config = config

    def run(
        self,
        suite: str,
        cases: Optional[List[CaseSpec]] = None,
        corpus_digest: Optional[str] = None,
        perturb: bool = False,
        on_case: Optional[Callable[[VerificationReport], None]] = None,
    ) -> ReportDocument:
        """
        Run a suite and return the report document.

        ``cases`` feeds the theorem1 part; ``on_case`` is called after every case.
        """
        if suite not in SUITES:
            raise UsageError(f"Unknown suite {suite!r}; expected one of {SUITES}")
        on_case = on_case or (lambda report: None)
        reports: List[VerificationReport] = []

        if suite in ("theorem1", "all"):
            for case in cases or []:
                report = verify_case(
                    case,
                    levi_convention=self.config.get("engine", "levi_convention", default="auto"),
                    agreement_samples=self.config.get("engine", "agreement_samples", default=20),
                    perturb=perturb,
                    include_timing=self.config.get("report", "include_timing", default=True),
                )
                reports.append(report)
                on_case(report)

        if suite in ("identities", "all"):
            logger.info("Running the exponent-identity suite")
            for report in run_identity_suite(
                rmax=self.config.get("suites", "identities", "rmax", default=5),
                mmax=self.config.get("suites", "identities", "mmax", default=5),
                nmax=self.config.get("suites", "identities", "nmax", default=4),
            ):
                reports.append(report)
                on_case(report)

        if suite in ("structure", "all"):
            logger.info("Running the structural suite")
            for report in run_structure_suite(
                max_size=self.config.get("suites", "structure", "max_size", default=24),
                max_pattern_size=self.config.get("suites", "structure", "max_pattern_size", default=18),
                max_borel_rank=self.config.get("suites", "structure", "max_borel_rank", default=8),
            ):
                reports.append(report)
                on_case(report)

        doc = ReportDocument.build(__version__, reports, corpus_digest=corpus_digest)
        logger.info(f"Run complete: {doc.summary.model_dump()}")
        return doc

    @staticmethod
    def compare_baseline(doc: ReportDocument, baseline: ReportDocument) -> List[str]:
        """Cases whose status got worse than in the baseline, or that disappeared."""
        current: Dict[CaseKey, VerificationReport] = {case_key(c): c for c in doc.cases}
        regressions = []
        for old in baseline.cases:
            key = case_key(old)
            new = current.get(key)
            if new is None:
                regressions.append(f"{old.label()}: missing (was {old.status.value})")
            elif STATUS_RANK[new.status] > STATUS_RANK[old.status]:
                regressions.append(f"{old.label()}: {old.status.value} -> {new.status.value}")
        for line in regressions:
            logger.warning(f"Regression against baseline: {line}")
        return regressions
