"""Weighted matroid intersection through rank-sum shape queries.

The Bellman-Ford search over the pruned exchange graph is emulated without
ever seeing the graph: arcs are recognized from shape (a)-(d) answers about
symmetric differences of ``I`` with the current paths. The same code runs on
a rank-sum oracle and on a common-independence plus maximum-rank oracle.
"""

import logging
from typing import Optional

from matroid_oracles.core.errors import ContractError
from matroid_oracles.core.ground import SubsetMask, Weighting, bit, elements, format_mask, popcount
from matroid_oracles.oracles.capability import (
    CiMaxBackend,
    SumBackend,
    SumQueryCapability,
)
from matroid_oracles.oracles.restricted import MatroidPair, QueryType, RestrictedOracle
from matroid_oracles.refgraph.exchange import ExchangeGraph, build_exchange_graph
from matroid_oracles.refgraph.paths import vertex_costs
from matroid_oracles.solvers.base import NULL_PATH, BaseSolver, PathSeq, SolveReport

logger = logging.getLogger(__name__)


class _PathAudit:
    """Checks path invariants and arc recognition against the full pair."""

    def __init__(self, pair: MatroidPair, i: SubsetMask, s: int) -> None:
        self.pair = pair
        self.i = i
        graph = build_exchange_graph(pair, i, pruned=True)
        self.from_source = bool(graph.sources >> s & 1)
        self.graph: ExchangeGraph = graph if self.from_source else graph.reversed()
        self.rooted = pair.m1 if self.from_source else pair.m2

    def arc(self, tail: int, head: int, accepted: bool) -> None:
        if accepted != self.graph.has_arc(tail, head):
            raise ContractError(
                "shape answers disagree with the pruned exchange graph",
                {"arc": (tail, head), "accepted": accepted},
            )

    def inside_path(self, path: PathSeq) -> None:
        j = self.i ^ path.mask
        if popcount(j) != popcount(self.i) or not self.pair.is_common_independent(j):
            raise ContractError(
                "path to an element of I breaks common independence", {"path": path.elements}
            )

    def outside_path(self, path: PathSeq) -> None:
        j = self.i ^ path.mask
        if popcount(j) != popcount(self.i) + 1 or not self.rooted.is_independent(j):
            raise ContractError(
                "path to an element outside I is not independent", {"path": path.elements}
            )


def _star(cap: SumQueryCapability, i: SubsetMask, px: PathSeq, y: int) -> bool:
    """``r_sum(I △ P_x) = 2|I| + 1`` and ``r_sum(I △ (P_x + y)) = 2|I|``."""
    x = px.last
    prefix = i ^ (px.mask & ~bit(x))
    return cap.shape_b(prefix, x) and cap.shape_d(i ^ px.mask ^ bit(y))


def _double_star(cap: SumQueryCapability, i: SubsetMask, py: PathSeq, x: int) -> bool:
    """Extension test of a path ending in ``I`` by ``x`` outside ``I``."""
    through = i ^ py.mask
    if cap.shape_a(i, x) and cap.shape_b(through, x):
        return True
    return cap.shape_b(i, x) and cap.shape_c(through, x)


def emulating_bellman_ford(
    cap: SumQueryCapability, weights: Weighting, i: SubsetMask, s: int
) -> Optional[PathSeq]:
    """Shortest cheapest path from ``s`` found through shape queries only.

    Args:
        cap: Shape-query backend.
        weights: Element weights.
        i: w-maximal common independent set of its size.
        s: Element of ``S_I ∪ T_I``.

    Returns:
        For ``s`` in ``S_I`` a shortest cheapest ``s``-``T_I`` path of the
        pruned exchange graph; for ``s`` only in ``T_I`` the analogue in the
        reversed graph. None when no such path exists.
    """
    n = cap.n
    costs = vertex_costs(weights, i)
    inside = elements(i)
    outside = [e for e in range(n) if not i >> e & 1]
    audit = _PathAudit(cap.audit_pair, i, s) if cap.audit_pair is not None else None

    paths: dict[int, PathSeq] = {e: NULL_PATH for e in range(n)}
    paths[s] = PathSeq.start(s, costs[s])

    for ell in range(1, n):
        if ell % 2 == 1:
            candidates = sorted(
                (paths[x] for x in outside if not paths[x].is_null), key=lambda p: p.key
            )
            for y in inside:
                for px in candidates:
                    if px.cost + costs[y] >= paths[y].cost:
                        break
                    if px.contains(y):
                        continue
                    accepted = _star(cap, i, px, y)
                    if audit is not None:
                        audit.arc(px.last, y, accepted)
                    if accepted:
                        paths[y] = px.extend(y, costs[y])
                        if audit is not None:
                            audit.inside_path(paths[y])
                        break
        else:
            candidates = sorted(
                (paths[y] for y in inside if not paths[y].is_null), key=lambda p: p.key
            )
            for x in outside:
                for py in candidates:
                    if py.cost + costs[x] >= paths[x].cost:
                        break
                    if py.contains(x):
                        continue
                    accepted = _double_star(cap, i, py, x)
                    if audit is not None:
                        audit.arc(py.last, x, accepted)
                    if accepted:
                        paths[x] = py.extend(x, costs[x])
                        if audit is not None:
                            audit.outside_path(paths[x])
                        break

    finals = sorted((paths[t] for t in outside if not paths[t].is_null), key=lambda p: p.key)
    for pt in finals:
        t = pt.last
        if cap.shape_c(i ^ (pt.mask & ~bit(t)), t):
            logger.debug(f"Bellman-Ford from {s}: path {pt.elements} cost {pt.cost}")
            return pt
    logger.debug(f"Bellman-Ford from {s}: no path")
    return None


def cheapest_path_augment_rank_sum(
    cap: SumQueryCapability, weights: Weighting, i: SubsetMask
) -> Optional[SubsetMask]:
    """Best augmentation over all sources and sinks, or None if ``i`` is maximum."""
    best: Optional[PathSeq] = None
    for s in range(cap.n):
        if i >> s & 1 or not cap.in_sources_or_sinks(i, s):
            continue
        path = emulating_bellman_ford(cap, weights, i, s)
        if path is not None and (best is None or path.key < best.key):
            best = path
    if best is None:
        return None
    return i ^ best.mask


class RankSumSolver(BaseSolver):
    """Weighted intersection with a rank-sum oracle."""

    name = "sum"
    description = "Weighted intersection via emulated Bellman-Ford over rank-sum queries"
    required_queries = (QueryType.SUM,)

    def __init__(
        self,
        oracle: RestrictedOracle,
        audit_pair: Optional[MatroidPair] = None,
        depth_cap: Optional[int] = None,
    ) -> None:
        super().__init__(oracle, audit_pair, depth_cap)
        self.capability: SumQueryCapability = SumBackend(oracle, audit_pair)

    def augment(self, i: SubsetMask, weights: Weighting) -> Optional[SubsetMask]:
        j = cheapest_path_augment_rank_sum(self.capability, weights, i)
        if j is not None:
            logger.debug(f"{self.name}: {format_mask(i)} -> {format_mask(j)}")
        return j


class CiMaxSolver(RankSumSolver):
    """Rank-sum algorithm driven by common-independence and maximum-rank queries."""

    name = "ci-max"
    description = "Weighted intersection with common-independence plus maximum-rank queries"
    required_queries = (QueryType.CI, QueryType.MAX)

    def __init__(
        self,
        oracle: RestrictedOracle,
        audit_pair: Optional[MatroidPair] = None,
        depth_cap: Optional[int] = None,
    ) -> None:
        BaseSolver.__init__(self, oracle, audit_pair, depth_cap)
        self.capability = CiMaxBackend(oracle, audit_pair)


def solve_rank_sum(
    oracle: RestrictedOracle,
    weights: Optional[Weighting] = None,
    audit_pair: Optional[MatroidPair] = None,
) -> SolveReport:
    return RankSumSolver(oracle, audit_pair).solve(weights)


def solve_ci_max(
    oracle: RestrictedOracle,
    weights: Optional[Weighting] = None,
    audit_pair: Optional[MatroidPair] = None,
) -> SolveReport:
    return CiMaxSolver(oracle, audit_pair).solve(weights)
