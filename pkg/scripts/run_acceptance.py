#!/usr/bin/env python3
"""Acceptance Run.

Runs every restricted solver against brute force on seeded corpora, checks
the exchange-graph properties exhaustively on the small catalog, and searches
for the oracle separation witnesses. Prints one pass/fail row per check.

Usage:
    uv run python scripts/run_acceptance.py
    uv run python scripts/run_acceptance.py --quick      # 50-instance corpora
    uv run python scripts/run_acceptance.py --config config/default.yaml
"""

import logging
import sys
import time
from collections.abc import Callable
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "src"))

from dotenv import load_dotenv

load_dotenv(project_root / ".env")

from rich.console import Console
from rich.table import Table

from matroid_oracles.core.config import Settings, load_config
from matroid_oracles.core.ground import elements, popcount
from matroid_oracles.core.instance import Instance
from matroid_oracles.instances import GeneratorConfig, corpus, matching_instance
from matroid_oracles.oracles import MatroidPair, OracleKind, QueryType, RestrictedOracle
from matroid_oracles.refgraph import (
    bfs_distances,
    build_exchange_graph,
    count_perfect_matchings,
    has_negative_cycle,
    shortest_cheapest_path,
)
from matroid_oracles.solvers import (
    emulating_bfs,
    get_registry,
    run_instance,
    solve_ci_max,
    solve_rank_sum,
)
from matroid_oracles.verify import (
    STANDARD_TARGETS,
    brute_force,
    compare_report,
    find_separation_witness,
    verify_witness,
)
from matroid_oracles.zoo import SplitMatroid, reference_weightings, small_zoo

console = Console()
logger = logging.getLogger("acceptance")

ALL_KINDS = ("uniform", "partition", "graphic", "split", "truncation", "direct-sum")


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""
    seconds: float = 0.0


def _base_config(settings: Settings, m1_kinds: tuple[str, ...] = ALL_KINDS) -> GeneratorConfig:
    base = GeneratorConfig.from_settings(settings.generator, settings.verify.corpus_seed)
    return replace(base, m1_kinds=m1_kinds, m2_kinds=ALL_KINDS)


def _verify_corpus(
    name: str,
    instances: list[Instance],
    weighted: bool,
    settings: Settings,
    budget_factor: Optional[int] = None,
) -> tuple[int, list[str]]:
    """Solve each instance with ``name`` and compare against brute force."""
    solver_class = get_registry().get_solver_class(name)
    assert solver_class is not None
    failures = []
    for instance in instances:
        pair = MatroidPair(instance.m1, instance.m2)
        report = run_instance(name, instance, weighted=weighted)
        truth = brute_force(pair, instance.weights, settings.verify.brute_force_budget)
        result = compare_report(
            report, truth, pair, solver_class.required_queries, budget_factor
        )
        if not result.passed:
            failures.append(f"{instance.name}: {result.mismatches[0].message}")
        elif name == "full" and truth.duality_min != report.max_cardinality:
            failures.append(f"{instance.name}: duality minimum {truth.duality_min}")
    return len(instances), failures


def check_rank_sum_corpus(settings: Settings, size: int) -> CheckResult:
    """Weighted rank-sum solver, query discipline and the Sum-query budget."""
    instances = list(corpus(_base_config(settings), size, settings.verify.max_n))
    checked, failures = _verify_corpus(
        "sum", instances, True, settings, settings.verify.query_budget_factor
    )
    return CheckResult("rank-sum corpus", not failures, checked, "; ".join(failures[:3]))


def check_catalog(settings: Settings) -> CheckResult:
    """Every ordered catalog pair and weighting, rank-sum and CI+Max side by side."""
    checked, failures = 0, []
    for n in (4, 5):
        zoo = small_zoo(n)
        for a, m1 in enumerate(zoo):
            for b, m2 in enumerate(zoo):
                pair = MatroidPair(m1, m2)
                for weights in reference_weightings(n):
                    truth = brute_force(pair, weights)
                    report = solve_rank_sum(RestrictedOracle(pair, OracleKind.SUM), weights)
                    twin = solve_ci_max(RestrictedOracle(pair, OracleKind.CI_PLUS_MAX), weights)
                    result = compare_report(report, truth, pair, (QueryType.SUM,))
                    checked += 1
                    label = f"n={n} ({a},{b}) w={weights.values}"
                    if not result.passed:
                        failures.append(f"{label}: {result.mismatches[0].message}")
                    if (twin.sets, twin.weights) != (report.sets, report.weights):
                        failures.append(f"{label}: ci-max differs from sum")
                    if twin.counters.sum or twin.counters.min:
                        failures.append(f"{label}: ci-max issued sum/min queries")
    return CheckResult("catalog, sum = ci-max", not failures, checked, "; ".join(failures[:3]))


def check_ci_max_corpus(settings: Settings, size: int) -> CheckResult:
    """CI+Max reports identical to rank-sum reports on the mixed corpus."""
    failures = []
    instances = list(corpus(_base_config(settings), size, settings.verify.max_n))
    for instance in instances:
        report = run_instance("sum", instance)
        twin = run_instance("ci-max", instance)
        if (twin.sets, twin.weights) != (report.sets, report.weights):
            failures.append(instance.name)
        if twin.counters.sum or twin.counters.min:
            failures.append(f"{instance.name}: sum/min queries")
    return CheckResult("ci-max corpus", not failures, len(instances), "; ".join(failures[:3]))


def check_ci_partition(settings: Settings, size: int) -> CheckResult:
    """Partition corpus plus matchings; BFS emulation lengths equal graph distances."""
    config = _base_config(settings, ("partition-one",))
    instances = list(corpus(config, size - size // 5, settings.verify.max_n))
    instances += [matching_instance(3, 4, 0.5, seed=s) for s in range(size // 5)]
    checked, failures = _verify_corpus("ci-partition", instances, False, settings)
    for instance in instances:
        pair = MatroidPair(instance.m1, instance.m2)
        report = run_instance("ci-partition", instance, weighted=False)
        for i in report.sets:
            graph = build_exchange_graph(pair, i)
            for s in elements(graph.sources & ~graph.sinks):
                distances = bfs_distances(graph, s)
                reachable = [distances[t] for t in elements(graph.sinks) if t in distances]
                path = emulating_bfs(RestrictedOracle(pair, OracleKind.CI), i, s)
                length = None if path is None else path.length
                if length != (min(reachable) if reachable else None):
                    failures.append(f"{instance.name}: BFS length {length} from {s}")
    return CheckResult("ci-partition corpus", not failures, checked, "; ".join(failures[:3]))


def check_ci_split(settings: Settings, size: int) -> CheckResult:
    """Split corpus; shortest cheapest paths from w-maximal sets have length <= 3."""
    instances = list(corpus(_base_config(settings, ("split",)), size, settings.verify.max_n))
    checked, failures = _verify_corpus("ci-split", instances, True, settings)
    for instance in instances:
        if instance.n > 8:
            continue
        pair = MatroidPair(instance.m1, instance.m2)
        truth = brute_force(pair, instance.weights)
        for i in truth.per_size_set:
            graph = build_exchange_graph(pair, i)
            path = shortest_cheapest_path(graph, instance.weights, graph.sources, graph.sinks)
            if path is not None and path.length > 3:
                failures.append(f"{instance.name}: path of length {path.length}")
    return CheckResult("ci-split corpus", not failures, checked, "; ".join(failures[:3]))


def check_certificates(settings: Settings, size: int) -> CheckResult:
    """Reference solver certificates against the brute-force duality minimum."""
    instances = list(corpus(_base_config(settings), size, settings.verify.max_n))
    checked, failures = _verify_corpus("full", instances, True, settings)
    return CheckResult("certificates", not failures, checked, "; ".join(failures[:3]))


def check_exchange_properties(settings: Settings) -> CheckResult:
    """Matching, unique-matching, negative-cycle and single-tightness properties."""
    assertions, failures = 0, []
    for n in (4, 5):
        zoo = small_zoo(n)
        for m in zoo:
            if not isinstance(m, SplitMatroid):
                continue
            r = m.representation.r
            for f in m.ground.subsets():
                if popcount(f) < r and m.is_independent(f):
                    assertions += 1
                    if len(m.tight_hyperedges(f)) > 1:
                        failures.append(f"split tight twice at {elements(f)}")
        for m1 in zoo:
            for m2 in zoo:
                pair = MatroidPair(m1, m2)
                common = [x for x in pair.ground.subsets() if pair.is_common_independent(x)]
                for i in common:
                    graph = build_exchange_graph(pair, i, pruned=False)
                    for j in common:
                        if popcount(j) != popcount(i):
                            continue
                        assertions += 2
                        if count_perfect_matchings(graph, i ^ j, 1) < 1:
                            failures.append(f"no A1 matching {elements(i)} vs {elements(j)}")
                        if count_perfect_matchings(graph, i ^ j, 2) < 1:
                            failures.append(f"no A2 matching {elements(i)} vs {elements(j)}")
                    for z in pair.ground.subsets():
                        if popcount(z & i) != popcount(z & ~i):
                            continue
                        for side, m in ((1, m1), (2, m2)):
                            if count_perfect_matchings(graph, z, side) == 1:
                                assertions += 1
                                if not m.is_independent(i ^ z):
                                    failures.append(
                                        f"unique A{side} matching on {elements(z)} "
                                        f"leaves M{side} at {elements(i)}"
                                    )
                for weights in reference_weightings(n):
                    for i in brute_force(pair, weights).per_size_set:
                        assertions += 1
                        graph = build_exchange_graph(pair, i, pruned=False)
                        if has_negative_cycle(graph, weights):
                            failures.append(f"negative cycle at w-maximal {elements(i)}")
    return CheckResult("exchange properties", not failures, assertions, "; ".join(failures[:3]))


def check_witnesses(settings: Settings) -> CheckResult:
    """The three separations, each re-verified over every subset."""
    failures = []
    for target in STANDARD_TARGETS:
        found = find_separation_witness(
            target.target,
            target.agreeing,
            truncation=target.truncation,
            values=target.values,
            max_vertices=settings.witness.max_vertices,
            edge_count=settings.witness.edge_count,
        )
        if found is None or not verify_witness(found):
            failures.append(target.target.value)
    return CheckResult(
        "separation witnesses", not failures, len(STANDARD_TARGETS), ", ".join(failures)
    )


def main() -> int:
    """Main entry point."""
    import argparse

    parser = argparse.ArgumentParser(description="Matroid oracles acceptance run")
    parser.add_argument("--config", "-c", type=Path, help="Path to configuration file")
    parser.add_argument("--quick", action="store_true", help="Use 50-instance corpora")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    args = parser.parse_args()

    logging.basicConfig(
        level=logging.DEBUG if args.debug else logging.WARNING,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    settings = load_config(args.config)
    size = 50 if args.quick else settings.verify.corpus_size
    split_size = 50 if args.quick else 300

    checks: list[Callable[[], CheckResult]] = [
        lambda: check_rank_sum_corpus(settings, size),
        lambda: check_catalog(settings),
        lambda: check_ci_max_corpus(settings, size),
        lambda: check_ci_partition(settings, size),
        lambda: check_ci_split(settings, split_size),
        lambda: check_certificates(settings, size),
        lambda: check_exchange_properties(settings),
        lambda: check_witnesses(settings),
    ]

    results = []
    for check in checks:
        start = time.perf_counter()
        result = check()
        result.seconds = time.perf_counter() - start
        logger.info(f"{result.name}: {'PASS' if result.passed else 'FAIL'}")
        results.append(result)

    table = Table(title="Acceptance Results")
    table.add_column("Check", style="cyan")
    table.add_column("Checked", justify="right")
    table.add_column("Time (s)", justify="right")
    table.add_column("Result")
    table.add_column("First failures", style="dim")
    for result in results:
        table.add_row(
            result.name,
            str(result.checked),
            f"{result.seconds:.1f}",
            "[green]PASS[/green]" if result.passed else "[red]FAIL[/red]",
            result.detail,
        )
    console.print(table)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
