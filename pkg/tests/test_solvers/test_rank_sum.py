"""Tests for the rank-sum solver and its emulated Bellman-Ford search."""

from typing import Optional

import pytest

from matroid_oracles.core.errors import CapabilityError
from matroid_oracles.core.ground import Weighting, bit, elements, mask_of
from matroid_oracles.core.instance import Instance
from matroid_oracles.instances import GeneratorConfig, corpus
from matroid_oracles.oracles import (
    CiMaxBackend,
    MatroidPair,
    OracleKind,
    QueryType,
    RestrictedOracle,
    SumBackend,
)
from matroid_oracles.refgraph import build_exchange_graph, shortest_cheapest_path
from matroid_oracles.solvers import (
    CiMaxSolver,
    RankSumSolver,
    emulating_bellman_ford,
    solve_ci_max,
    solve_rank_sum,
)
from matroid_oracles.verify import brute_force, compare_report
from matroid_oracles.zoo import make_free, make_uniform, partition_from_labels

ALL_KINDS = ("uniform", "partition", "graphic", "split", "truncation", "direct-sum")
K22_WEIGHTS = Weighting((5, 1, 1, 4))


class TestEmulatingBellmanFord:
    """Tests for the shape-query Bellman-Ford emulation."""

    def test_single_element_path(self) -> None:
        """Test that from the empty set a common nonloop is its own path."""
        pair = MatroidPair(make_free(3), make_free(3))
        cap = SumBackend(RestrictedOracle(pair, OracleKind.SUM))
        path = emulating_bellman_ford(cap, Weighting((2, 7, 1)), 0, 1)
        assert path is not None
        assert path.elements == (1,)
        assert path.cost == -7

    def test_no_augmenting_path(self) -> None:
        """Test one partition class against the free matroid from I = {0}."""
        pair = MatroidPair(partition_from_labels([0, 0]), make_free(2))
        cap = SumBackend(RestrictedOracle(pair, OracleKind.SUM))
        assert emulating_bellman_ford(cap, Weighting.unit(2), bit(0), 1) is None

    def test_k22_paths(self, k22_pair: MatroidPair) -> None:
        """Test the paths found from each source over I = {0}."""
        cap = SumBackend(RestrictedOracle(k22_pair, OracleKind.SUM))
        direct = emulating_bellman_ford(cap, K22_WEIGHTS, bit(0), 3)
        assert direct is not None
        assert direct.elements == (3,)
        through = emulating_bellman_ford(cap, K22_WEIGHTS, bit(0), 2)
        assert through is not None
        assert through.elements == (2, 0, 1)
        assert through.cost == 3

    def test_reversed_search_from_sink(self, k22_pair: MatroidPair) -> None:
        """Test that a sink outside the sources searches the reversed graph."""
        cap = SumBackend(RestrictedOracle(k22_pair, OracleKind.SUM), audit_pair=k22_pair)
        path = emulating_bellman_ford(cap, K22_WEIGHTS, bit(0), 1)
        assert path is not None
        assert path.elements == (1, 0, 2)
        assert k22_pair.is_common_independent(bit(0) ^ path.mask)

    def test_ci_max_backend_same_paths(self, k22_pair: MatroidPair) -> None:
        """Test that both backends drive the emulation to the same path."""
        sums = SumBackend(RestrictedOracle(k22_pair, OracleKind.SUM))
        ci_max = CiMaxBackend(RestrictedOracle(k22_pair, OracleKind.CI_PLUS_MAX))
        for s in (1, 2, 3):
            first = emulating_bellman_ford(sums, K22_WEIGHTS, bit(0), s)
            second = emulating_bellman_ford(ci_max, K22_WEIGHTS, bit(0), s)
            assert first == second


class TestRankSumSolver:
    """Tests for RankSumSolver."""

    def test_k22_weighted(self, k22_pair: MatroidPair) -> None:
        """Test the per-size optima 0, 5, 9 on K_{2,2}."""
        report = solve_rank_sum(RestrictedOracle(k22_pair, OracleKind.SUM), K22_WEIGHTS)
        assert report.sets == [0, bit(0), mask_of([0, 3])]
        assert report.weights == [0, 5, 9]
        assert report.optimum_weight == 9
        assert report.optimum_set == mask_of([0, 3])
        assert report.counters.ci == 0
        assert report.counters.sum > 0

    def test_k22_with_audit(self, k22_pair: MatroidPair) -> None:
        """Test that the audited run agrees with the plain one."""
        oracle = RestrictedOracle(k22_pair, OracleKind.SUM)
        report = RankSumSolver(oracle, audit_pair=k22_pair).solve(K22_WEIGHTS)
        assert report.weights == [0, 5, 9]

    def test_all_negative_weights(self) -> None:
        """Test that the optimum is the empty set when every weight is negative."""
        pair = MatroidPair(make_uniform(3, 2), make_free(3))
        report = solve_rank_sum(RestrictedOracle(pair, OracleKind.SUM), Weighting((-1, -2, -3)))
        assert report.optimum_weight == 0
        assert report.optimum_set == 0
        assert report.max_cardinality == 2
        assert report.weights == [0, -1, -3]

    def test_rank_one_pair(self) -> None:
        """Test U(1,3) twice: maximum cardinality 1."""
        pair = MatroidPair(make_uniform(3, 1), make_uniform(3, 1))
        report = solve_rank_sum(RestrictedOracle(pair, OracleKind.SUM))
        assert report.max_cardinality == 1
        assert not report.weighted

    def test_rejects_ci_oracle(self, k22_pair: MatroidPair) -> None:
        """Test that construction fails before any query on a ci oracle."""
        oracle = RestrictedOracle(k22_pair, OracleKind.CI)
        with pytest.raises(CapabilityError):
            RankSumSolver(oracle)
        assert oracle.counters.total == 0

    def test_zoo_against_brute_force(
        self, pairs4: list[MatroidPair], weights4: list[Weighting]
    ) -> None:
        """Test every zoo pair and weighting against exhaustive search."""
        for pair in pairs4:
            for weights in weights4:
                report = solve_rank_sum(RestrictedOracle(pair, OracleKind.SUM), weights)
                truth = brute_force(pair, weights)
                result = compare_report(report, truth, pair, (QueryType.SUM,), 8)
                assert result.passed, result.mismatches


class TestCiMaxSolver:
    """Tests for the rank-sum algorithm on a ci+max oracle."""

    def test_k22_weighted(self, k22_pair: MatroidPair) -> None:
        """Test the same optima with no rank-sum queries."""
        report = solve_ci_max(RestrictedOracle(k22_pair, OracleKind.CI_PLUS_MAX), K22_WEIGHTS)
        assert report.weights == [0, 5, 9]
        assert report.counters.sum == 0
        assert report.counters.ci > 0

    def test_rejects_sum_oracle(self, k22_pair: MatroidPair) -> None:
        """Test that a sum oracle cannot answer ci+max."""
        with pytest.raises(CapabilityError):
            CiMaxSolver(RestrictedOracle(k22_pair, OracleKind.SUM))

    def test_same_sets_as_rank_sum(self, pairs4: list[MatroidPair]) -> None:
        """Test that both oracles produce identical per-size sets."""
        weights = Weighting((3, -1, 4, 1))
        for pair in pairs4:
            first = solve_rank_sum(RestrictedOracle(pair, OracleKind.SUM), weights)
            second = solve_ci_max(RestrictedOracle(pair, OracleKind.CI_PLUS_MAX), weights)
            assert first.sets == second.sets

    def test_instance_native_kind(self, k22: Instance) -> None:
        """Test the narrowest oracle kind of each rank-sum solver."""
        assert RankSumSolver.native_kind() is OracleKind.SUM
        assert CiMaxSolver.native_kind() is OracleKind.CI_PLUS_MAX
        assert RankSumSolver.supports(k22)


class TestEmulationMatchesReference:
    """Emulated Bellman-Ford against the reference search on generated corpora."""

    def _reference(
        self, pair: MatroidPair, weights: Weighting, i: int, s: int
    ) -> Optional[tuple[int, int]]:
        graph = build_exchange_graph(pair, i)
        if not graph.sources >> s & 1:
            graph = graph.reversed()
        path = shortest_cheapest_path(graph, weights, bit(s), graph.sinks)
        return None if path is None else (path.cost, path.length)

    def test_audited_paths_from_sources_and_sinks(self) -> None:
        """Test every s in S_I ∪ T_I for every w-maximal I, with audit checks on."""
        config = GeneratorConfig(
            seed=41, m1_kinds=ALL_KINDS, m2_kinds=ALL_KINDS, weight_min=-6, weight_max=9
        )
        compared = 0
        for instance in corpus(config, 60, max_n=6):
            pair = MatroidPair(instance.m1, instance.m2)
            weights = instance.weights
            for i in brute_force(pair, weights).per_size_set:
                graph = build_exchange_graph(pair, i)
                for s in elements(graph.sources | graph.sinks):
                    cap = SumBackend(RestrictedOracle(pair, OracleKind.SUM), audit_pair=pair)
                    path = emulating_bellman_ford(cap, weights, i, s)
                    found = None if path is None else (path.cost, path.length)
                    assert found == self._reference(pair, weights, i, s), (instance.name, i, s)
                    compared += 1
        assert compared > 100

    def test_ci_max_backend_on_corpus(self) -> None:
        """Test that the ci+max backend finds the same paths as the sum backend."""
        config = GeneratorConfig(seed=42, m1_kinds=ALL_KINDS, m2_kinds=ALL_KINDS)
        for instance in corpus(config, 20, max_n=5):
            pair = MatroidPair(instance.m1, instance.m2)
            for i in brute_force(pair, instance.weights).per_size_set:
                graph = build_exchange_graph(pair, i)
                for s in elements(graph.sources | graph.sinks):
                    sums = SumBackend(RestrictedOracle(pair, OracleKind.SUM))
                    ci_max = CiMaxBackend(
                        RestrictedOracle(pair, OracleKind.CI_PLUS_MAX), audit_pair=pair
                    )
                    first = emulating_bellman_ford(sums, instance.weights, i, s)
                    second = emulating_bellman_ford(ci_max, instance.weights, i, s)
                    assert first == second

    def test_audited_solver_on_corpus(self) -> None:
        """Test that audited rank-sum runs pass and match brute force."""
        config = GeneratorConfig(seed=43, m1_kinds=ALL_KINDS, m2_kinds=ALL_KINDS)
        for instance in corpus(config, 30, max_n=6):
            pair = MatroidPair(instance.m1, instance.m2)
            oracle = RestrictedOracle(pair, OracleKind.SUM)
            report = RankSumSolver(oracle, audit_pair=pair).solve(instance.weights)
            result = compare_report(report, brute_force(pair, instance.weights), pair)
            assert result.passed, (instance.name, result.mismatches)
