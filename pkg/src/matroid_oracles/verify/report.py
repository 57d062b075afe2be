"""Comparison of solver reports against brute-force ground truth."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from matroid_oracles.core.ground import format_mask, popcount
from matroid_oracles.oracles.restricted import MatroidPair, QueryType
from matroid_oracles.solvers.base import SolveReport
from matroid_oracles.verify.brute_force import BruteForceResult

logger = logging.getLogger(__name__)


class VerificationStatus(Enum):
    """Result of a verification."""

    PASSED = "passed"
    FAILED = "failed"


@dataclass
class Mismatch:
    """Details of one disagreement with the ground truth."""

    rule: str
    message: str
    expected: Any
    actual: Any


@dataclass
class VerificationResult:
    """Outcome of comparing one solve with brute force."""

    status: VerificationStatus
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == VerificationStatus.PASSED


def compare_report(
    report: SolveReport,
    truth: BruteForceResult,
    pair: Optional[MatroidPair] = None,
    allowed_queries: Optional[tuple[QueryType, ...]] = None,
    query_budget_factor: Optional[int] = None,
) -> VerificationResult:
    """Check a solve report rule by rule.

    Args:
        report: Solver output.
        truth: Brute-force result on the same instance and weights.
        pair: Both matroids, to check the reported sets and certificate.
        allowed_queries: Query types the solver may issue; others must be 0.
        query_budget_factor: Bound ``factor * n^5`` on the number of
            rank-sum queries, checked when given.
    """
    mismatches: list[Mismatch] = []

    def check(rule: str, message: str, expected: Any, actual: Any) -> None:
        if expected != actual:
            mismatches.append(Mismatch(rule, message, expected, actual))

    check(
        "max_cardinality",
        "maximum common independent set size",
        truth.max_cardinality,
        report.max_cardinality,
    )
    if report.weighted:
        check("per_size", "w-maximal weight per size", truth.per_size_weight, report.weights)
        check("optimum", "maximum weight", truth.optimum_weight, report.optimum_weight)

    if pair is not None:
        for k, x in enumerate(report.sets):
            if not pair.is_common_independent(x) or popcount(x) != k:
                mismatches.append(
                    Mismatch("validity", f"set of size {k}", "common independent", format_mask(x))
                )
        if report.certificate is not None:
            z = report.certificate
            value = pair.r1(z) + pair.r2(pair.ground.complement(z))
            check("certificate", "r1(Z) + r2(E \\ Z)", truth.max_cardinality, value)

    check("duality", "min over Z equals max cardinality", truth.max_cardinality, truth.duality_min)

    if allowed_queries is not None:
        for query in QueryType:
            if query not in allowed_queries:
                issued = report.counters.count(query)
                check("discipline", f"{query.value} queries issued", 0, issued)

    if query_budget_factor is not None:
        bound = query_budget_factor * report.n**5
        if report.counters.sum > bound:
            mismatches.append(
                Mismatch("budget", "rank-sum queries", f"<= {bound}", report.counters.sum)
            )

    for mismatch in mismatches:
        logger.warning(
            f"Verification mismatch [{mismatch.rule}] {mismatch.message}: "
            f"expected {mismatch.expected}, got {mismatch.actual}"
        )
    status = VerificationStatus.FAILED if mismatches else VerificationStatus.PASSED
    return VerificationResult(status=status, mismatches=mismatches)
