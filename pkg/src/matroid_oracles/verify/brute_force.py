"""Exhaustive ground truth for small instances."""

import logging
from dataclasses import dataclass, field
from typing import Optional

from matroid_oracles.core.errors import BudgetExceededError
from matroid_oracles.core.ground import SubsetMask, Weighting, popcount
from matroid_oracles.oracles.restricted import MatroidPair

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 24


@dataclass
class BruteForceResult:
    """Exact optima by subset enumeration.

    ``per_size_weight[k]`` is the maximum weight of a common independent set
    of size ``k`` and ``per_size_set[k]`` the smallest mask attaining it.
    """

    n: int
    per_size_weight: list[int] = field(default_factory=list)
    per_size_set: list[SubsetMask] = field(default_factory=list)
    duality_min: int = 0
    duality_argmin: SubsetMask = 0

    @property
    def max_cardinality(self) -> int:
        return len(self.per_size_weight) - 1

    @property
    def optimum_weight(self) -> int:
        return max(self.per_size_weight)

    @property
    def optimum_size(self) -> int:
        return self.per_size_weight.index(self.optimum_weight)

    @property
    def optimum_set(self) -> SubsetMask:
        return self.per_size_set[self.optimum_size]


def brute_force(
    pair: MatroidPair, weights: Weighting, budget: Optional[int] = None
) -> BruteForceResult:
    """Enumerate every subset of the ground set.

    Args:
        pair: Both matroids.
        weights: Element weights.
        budget: Largest ground-set size to enumerate (default 24).

    Raises:
        BudgetExceededError: If ``n`` exceeds the budget.
    """
    limit = DEFAULT_BUDGET if budget is None else budget
    n = pair.n
    if n > limit:
        raise BudgetExceededError(
            "brute force would enumerate too many subsets", {"n": n, "budget": limit}
        )
    weights.check_ground(pair.ground)

    best: dict[int, tuple[int, SubsetMask]] = {}
    for x in pair.ground.subsets():
        if not pair.is_common_independent(x):
            continue
        k = popcount(x)
        w = weights.of(x)
        if k not in best or w > best[k][0]:
            best[k] = (w, x)

    result = BruteForceResult(n=n)
    for k in range(max(best) + 1):
        w, x = best[k]
        result.per_size_weight.append(w)
        result.per_size_set.append(x)

    full = pair.ground.full
    result.duality_min = n + 1
    for z in pair.ground.subsets():
        value = pair.r1(z) + pair.r2(full & ~z)
        if value < result.duality_min:
            result.duality_min = value
            result.duality_argmin = z

    logger.debug(
        f"Brute force n={n}: max cardinality {result.max_cardinality}, "
        f"optimum {result.optimum_weight}, duality {result.duality_min}"
    )
    return result
