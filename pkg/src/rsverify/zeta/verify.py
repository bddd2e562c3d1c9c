"""Coefficient-exact comparison of the zeta integrals with the L-function, and the check-suite wrappers."""

import logging
import time
from typing import Callable, List, Tuple

from ..algebra.series import TruncSeries
from ..core.errors import ExponentError, InternalCheckError
from ..groups.identities import (
    CaseChecks,
    alpha_check,
    check_exponent_identities,
    check_structure,
    collapse_check,
    resolve_levi_convention,
)
from ..groups.patterns import PatternGroups, build_patterns, check_u3_constraints
from ..models.cases import CaseSpec, Mode, PathName
from ..models.reports import CheckResult, Mismatch, Status, VerificationReport, derive_status
from ..whittaker.parameters import ParameterSpace
from .euler import euler_product
from .integrals import eval_I, eval_jpss, eval_tensor_integral_rank1

logger = logging.getLogger(__name__)

Evaluator = Callable[[ParameterSpace], TruncSeries]


def _mismatches(lhs: TruncSeries, rhs: TruncSeries, prefix: str = "") -> List[Mismatch]:
    return [Mismatch(degree=d, diff=f"{prefix}{diff}") for d, diff in lhs.differences(rhs)]


def _warn_failed(case: CaseSpec, checks: List[CheckResult]):
    for check in checks:
        if not check.passed:
            logger.warning(f"{case.label()}: {check.name} fails ({check.detail})")


def _levi_checks(case: CaseSpec, levi_convention: str) -> Tuple[str, List[CheckResult]]:
    """Exponent collapse under the resolved Levi convention, reported on every route."""
    r, m, n = case.r, case.m, case.n
    if n * m == 1:
        detail = "nm = 1: the Levi is the whole group and there is no twist"
        return "Q", [CheckResult.of("exponent_collapse", True, detail), CheckResult.of("levi_convention", True, detail)]
    convention, levi_check = resolve_levi_convention(n, m, r, levi_convention)
    return convention, [collapse_check(n, m, r, convention), levi_check]


def _chain_checks(patterns: PatternGroups) -> List[CheckResult]:
    """Intermediate identities of the unfolding chain."""
    problems = check_u3_constraints(patterns)
    return [alpha_check(patterns), CheckResult.of("u3_constraints", not problems, "; ".join(problems))]


def _agreement(case: CaseSpec, evaluate: Evaluator, symbolic: TruncSeries, samples: int) -> Tuple[CheckResult, List[Mismatch]]:
    """Specialize the symbolic result at random points and compare with direct specialized evaluation."""
    mismatches: List[Mismatch] = []
    for i in range(samples):
        seed = case.seed + i
        point = ParameterSpace(case.r, case.m, Mode.SPECIALIZED, seed)
        mismatches.extend(_mismatches(point.specialize(symbolic), evaluate(point), prefix=f"seed {seed}: "))
    ok = not mismatches
    return CheckResult.of("specialized_agreement", ok, f"{samples} samples"), mismatches


def verify_case(
    case: CaseSpec,
    levi_convention: str = "auto",
    agreement_samples: int = 20,
    perturb: bool = False,
    include_timing: bool = True,
) -> VerificationReport:
    """
    Compare the zeta integral with the Euler product up to X^order.

    The route is resolved from the case; an unsupported case raises UsageError.
    Internal assertion failures are reported as ERROR.
    """
    path = case.resolved_path()
    r, m, n, order = case.r, case.m, case.n, case.order
    start = time.perf_counter()
    logger.info(f"Verifying {case.label()} via {path.value}")

    checks: List[CheckResult] = []
    mismatches: List[Mismatch] = []
    lhs_digest = rhs_digest = None
    error = None
    try:
        convention, levi_checks = _levi_checks(case, levi_convention)
        checks.extend(levi_checks)
        if path == PathName.JPSS:
            def evaluate(space: ParameterSpace) -> TruncSeries:
                return eval_jpss(space, order, perturb)
        elif path == PathName.RANK1:
            def evaluate(space: ParameterSpace) -> TruncSeries:
                return eval_tensor_integral_rank1(space, n, order, perturb)
        else:
            patterns = build_patterns(n, m, r)
            checks.extend(_chain_checks(patterns))

            def evaluate(space: ParameterSpace) -> TruncSeries:
                return eval_I(space, n, order, convention, perturb, patterns)

        _warn_failed(case, checks)

        space = ParameterSpace(r, m, case.mode, case.seed)
        lhs = evaluate(space)
        rhs = euler_product(space, n, order, substituted=path != PathName.JPSS)
        lhs_digest, rhs_digest = lhs.digest(), rhs.digest()
        mismatches.extend(_mismatches(lhs, rhs))

        if not space.symbolic:
            # a specialized EQUAL always rests on the symbolic series as well
            symbolic = evaluate(ParameterSpace(r, m, Mode.SYMBOLIC))
            differing = _mismatches(space.specialize(symbolic), lhs, prefix="specialized symbolic - direct: ")
            checks.append(CheckResult.of("symbolic_agreement", not differing, f"seed {case.seed}"))
            mismatches.extend(differing)

        if path == PathName.RANK1:
            chain = eval_I(space, n, order, "Q", perturb)
            routes = _mismatches(lhs, chain, prefix="rank1 - chain: ")
            checks.append(CheckResult.of("two_route_consistency", not routes, f"{len(routes)} differing degrees"))
            mismatches.extend(routes)

        if space.symbolic and agreement_samples > 0:
            agreement, differing = _agreement(case, evaluate, lhs, agreement_samples)
            checks.append(agreement)
            mismatches.extend(differing)
    except (InternalCheckError, ExponentError) as e:
        logger.error(f"Internal check failed for {case.label()}: {e}")
        error = str(e)

    status = derive_status(mismatches, checks, error=error is not None)
    millis = int((time.perf_counter() - start) * 1000) if include_timing else 0
    log = logger.info if status in (Status.EQUAL, Status.PAPER_DISCREPANCY) else logger.warning
    log(f"{case.label()}: {status.value} ({len(mismatches)} mismatches, {millis} ms)")
    return VerificationReport(
        r=r,
        m=m,
        n=n,
        order=order,
        mode=case.mode,
        path=path,
        status=status,
        mismatches=mismatches,
        intermediate_checks=checks,
        millis=millis,
        lhs_digest=lhs_digest,
        rhs_digest=rhs_digest,
        error=error,
    )


def _suite_report(entry: CaseChecks, path: PathName) -> VerificationReport:
    return VerificationReport(
        r=entry.r,
        m=entry.m,
        n=entry.n,
        order=0,
        path=path,
        status=derive_status([], entry.checks),
        intermediate_checks=entry.checks,
    )


def run_identity_suite(rmax: int = 5, mmax: int = 5, nmax: int = 4) -> List[VerificationReport]:
    """The exponent identities, one report per (r, m, n)."""
    return [_suite_report(entry, PathName.IDENTITIES) for entry in check_exponent_identities(rmax, mmax, nmax)]


def run_structure_suite(max_size: int = 24, max_pattern_size: int = 18, max_borel_rank: int = 8) -> List[VerificationReport]:
    """The structural invariants, one report per (r, m, n)."""
    return [_suite_report(entry, PathName.STRUCTURE) for entry in check_structure(max_size, max_pattern_size, max_borel_rank)]
