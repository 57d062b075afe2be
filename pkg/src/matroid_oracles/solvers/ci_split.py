"""Weighted intersection with a common-independence oracle, M_1 elementary split.

When M_1 is an elementary split matroid, a shortest cheapest augmenting path
has at most three elements, so every candidate ``I + x`` and
``I + x1 + x2 - y`` is enumerated and the best common independent one kept.
"""

import logging
from itertools import combinations
from typing import Optional

from matroid_oracles.core.ground import SubsetMask, Weighting, bit, elements, format_mask, popcount
from matroid_oracles.oracles.restricted import QueryType, RestrictedOracle
from matroid_oracles.solvers.base import BaseSolver, SolveReport

logger = logging.getLogger(__name__)


def split_candidates(i: SubsetMask, n: int) -> list[SubsetMask]:
    """All ``I + x`` and ``I + x1 + x2 - y`` sets."""
    inside = elements(i)
    outside = [e for e in range(n) if not i >> e & 1]
    out = [i | bit(x) for x in outside]
    for x1, x2 in combinations(outside, 2):
        for y in inside:
            out.append((i | bit(x1) | bit(x2)) & ~bit(y))
    return out


def augment_ci_split(
    oracle: RestrictedOracle, weights: Weighting, i: SubsetMask
) -> Optional[SubsetMask]:
    """Heaviest common independent candidate one larger than ``i``.

    Candidates are tried by decreasing weight, then by size of the exchange,
    then lexicographically; the first one the oracle accepts is returned.
    """
    ranked = sorted(
        split_candidates(i, oracle.n),
        key=lambda j: (-weights.of(j), popcount(i ^ j), elements(j)),
    )
    for j in ranked:
        if oracle.query_ci(j):
            return j
    return None


class CiSplitSolver(BaseSolver):
    """Weighted intersection when M_1 is an elementary split matroid."""

    name = "ci-split"
    description = "Weighted intersection with common-independence queries (M1 elementary split)"
    required_queries = (QueryType.CI,)
    structure = "split"

    def augment(self, i: SubsetMask, weights: Weighting) -> Optional[SubsetMask]:
        j = augment_ci_split(self.oracle, weights, i)
        if j is not None:
            logger.debug(f"{self.name}: {format_mask(i)} -> {format_mask(j)}")
        return j


def solve_ci_split(oracle: RestrictedOracle, weights: Optional[Weighting] = None) -> SolveReport:
    return CiSplitSolver(oracle).solve(weights)
