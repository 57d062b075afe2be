"""Unweighted intersection with a common-independence oracle.

M_1 must be a partition matroid with all-one capacities. The oracle cannot
confirm this, so the declaration is trusted.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from matroid_oracles.core.ground import SubsetMask, Weighting, bit, elements, format_mask
from matroid_oracles.oracles.restricted import QueryType, RestrictedOracle
from matroid_oracles.solvers.base import NULL_PATH, BaseSolver, PathSeq, SolveReport

logger = logging.getLogger(__name__)


@dataclass
class BfsTrace:
    """Labels recorded by one BFS emulation.

    ``labels[y]`` is ``|P_y|`` when the path to ``y`` was defined; ``returned``
    is the length of the returned path, if any.
    """

    source: int
    labels: dict[int, int] = field(default_factory=dict)
    returned: Optional[int] = None


def emulating_bfs(
    oracle: RestrictedOracle,
    i: SubsetMask,
    s: int,
    depth_cap: Optional[int] = None,
    trace: Optional[BfsTrace] = None,
) -> Optional[PathSeq]:
    """Breadth-first search rooted at ``s`` through common-independence queries.

    Args:
        oracle: CI-capable oracle.
        i: Common independent set.
        s: Element outside ``i``.
        depth_cap: Bound on the number of layers (default ``n``).
        trace: Receives the label lengths when given.

    Returns:
        A sequence ``P`` with ``i △ P`` common independent and one larger
        than ``i``; a shortest ``s``-``T_I`` path of the pruned exchange
        graph when ``s`` is a source. None otherwise.
    """
    if oracle.query_ci(i | bit(s)):
        if trace is not None:
            trace.returned = 1
        return PathSeq.start(s)

    inside = elements(i)
    outside = [e for e in range(oracle.n) if not i >> e & 1]
    paths: dict[int, PathSeq] = {}
    for y in inside:
        if oracle.query_ci((i | bit(s)) & ~bit(y)):
            paths[y] = PathSeq((s, y), 0)
            if trace is not None:
                trace.labels[y] = 2
        else:
            paths[y] = NULL_PATH

    cap = depth_cap if depth_cap is not None else oracle.n
    for ell in range(1, cap + 1):
        frontier = [y for y in inside if paths[y].length == 2 * ell]
        if not frontier:
            return None

        for y_prev in frontier:
            for x in outside:
                if paths[y_prev].contains(x):
                    continue
                if oracle.query_ci(bit(y_prev) | bit(x)):
                    continue
                candidate = paths[y_prev].extend(x)
                if oracle.query_ci(i ^ candidate.mask):
                    if trace is not None:
                        trace.returned = candidate.length
                    return candidate

        for y in inside:
            if not paths[y].is_null:
                continue
            found = _extend_to(oracle, i, paths, frontier, outside, y)
            if found is not None:
                paths[y] = found
                if trace is not None:
                    trace.labels[y] = found.length
    return None


def _extend_to(
    oracle: RestrictedOracle,
    i: SubsetMask,
    paths: dict[int, PathSeq],
    frontier: list[int],
    outside: list[int],
    y: int,
) -> Optional[PathSeq]:
    for y_prev in frontier:
        for x in outside:
            if paths[y_prev].contains(x):
                continue
            if oracle.query_ci(bit(y_prev) | bit(x)):
                continue
            candidate = paths[y_prev].extend(x).extend(y)
            if oracle.query_ci(i ^ candidate.mask):
                return candidate
    return None


def augment_ci_partition(
    oracle: RestrictedOracle, i: SubsetMask, depth_cap: Optional[int] = None
) -> Optional[SubsetMask]:
    """A common independent set one larger than ``i``, or None if ``i`` is maximum."""
    outside = [e for e in range(oracle.n) if not i >> e & 1]
    for x in outside:
        if oracle.query_ci(i | bit(x)):
            return i | bit(x)
    for s in outside:
        path = emulating_bfs(oracle, i, s, depth_cap)
        if path is not None:
            logger.debug(f"BFS from {s} found path {path.elements}")
            return i ^ path.mask
    return None


class CiPartitionSolver(BaseSolver):
    """Maximum cardinality when M_1 is an all-one partition matroid."""

    name = "ci-partition"
    description = "Unweighted intersection with common-independence queries (M1 all-one partition)"
    required_queries = (QueryType.CI,)
    weighted = False
    structure = "partition"

    def augment(self, i: SubsetMask, weights: Weighting) -> Optional[SubsetMask]:
        j = augment_ci_partition(self.oracle, i, self.depth_cap)
        if j is not None:
            logger.debug(f"{self.name}: {format_mask(i)} -> {format_mask(j)}")
        return j


def solve_ci_partition(oracle: RestrictedOracle, depth_cap: Optional[int] = None) -> SolveReport:
    return CiPartitionSolver(oracle, depth_cap=depth_cap).solve()
