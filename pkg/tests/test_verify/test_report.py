"""Tests for comparing solve reports with brute force."""

from matroid_oracles.core.ground import Weighting, mask_of
from matroid_oracles.oracles import MatroidPair, OracleKind, QueryType
from matroid_oracles.solvers import SolveReport
from matroid_oracles.verify import (
    VerificationStatus,
    brute_force,
    compare_report,
)

K22_WEIGHTS = Weighting((5, 1, 1, 4))


def _report(sets: list[int], weighted: bool = True) -> SolveReport:
    return SolveReport(
        solver="test",
        oracle_kind=OracleKind.SUM,
        n=4,
        weighted=weighted,
        sets=sets,
        weights=[K22_WEIGHTS.of(s) for s in sets],
    )


class TestCompareReport:
    """Tests for compare_report."""

    def test_correct_report_passes(self, k22_pair: MatroidPair) -> None:
        """Test a report matching the ground truth."""
        truth = brute_force(k22_pair, K22_WEIGHTS)
        result = compare_report(_report([0, 1, 9]), truth, k22_pair)
        assert result.passed
        assert result.status is VerificationStatus.PASSED
        assert result.mismatches == []

    def test_suboptimal_set_detected(self, k22_pair: MatroidPair) -> None:
        """Test that the light matching fails the per-size and optimum rules."""
        truth = brute_force(k22_pair, K22_WEIGHTS)
        result = compare_report(_report([0, 1, mask_of([1, 2])]), truth, k22_pair)
        assert not result.passed
        assert {m.rule for m in result.mismatches} == {"per_size", "optimum"}

    def test_unweighted_ignores_weights(self, k22_pair: MatroidPair) -> None:
        """Test that unweighted reports are judged by cardinality only."""
        truth = brute_force(k22_pair, K22_WEIGHTS)
        result = compare_report(_report([0, 2, mask_of([1, 2])], weighted=False), truth, k22_pair)
        assert result.passed

    def test_invalid_set_and_cardinality(self, k22_pair: MatroidPair) -> None:
        """Test a dependent set reported as maximum."""
        truth = brute_force(k22_pair, K22_WEIGHTS)
        report = _report([0, mask_of([0, 1])], weighted=False)
        rules = {m.rule for m in compare_report(report, truth, k22_pair).mismatches}
        assert rules == {"max_cardinality", "validity"}

    def test_certificate_checked(self, k22_pair: MatroidPair) -> None:
        """Test that a certificate with the wrong value is flagged."""
        truth = brute_force(k22_pair, K22_WEIGHTS)
        report = _report([0, 1, 9])
        report.certificate = mask_of([0, 1])
        result = compare_report(report, truth, k22_pair)
        assert [m.rule for m in result.mismatches] == ["certificate"]
        assert result.mismatches[0].actual == 3
        report.certificate = 0b1111
        assert compare_report(report, truth, k22_pair).passed

    def test_query_discipline(self, k22_pair: MatroidPair) -> None:
        """Test that disallowed query types must stay at zero."""
        truth = brute_force(k22_pair, K22_WEIGHTS)
        report = _report([0, 1, 9])
        report.counters.ci = 3
        result = compare_report(report, truth, allowed_queries=(QueryType.SUM,))
        assert [m.rule for m in result.mismatches] == ["discipline"]
        assert compare_report(report, truth, allowed_queries=(QueryType.SUM, QueryType.CI)).passed

    def test_query_budget(self, k22_pair: MatroidPair) -> None:
        """Test the factor * n^5 bound on rank-sum queries."""
        truth = brute_force(k22_pair, K22_WEIGHTS)
        report = _report([0, 1, 9])
        report.counters.sum = 1025
        assert not compare_report(report, truth, query_budget_factor=1).passed
        report.counters.sum = 1024
        assert compare_report(report, truth, query_budget_factor=1).passed
