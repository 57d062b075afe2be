"""Base solver class and the shared solve driver."""

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, ClassVar, Optional, Union

from matroid_oracles.core.errors import CapabilityError
from matroid_oracles.core.ground import SubsetMask, Weighting, bit, elements, format_mask, popcount
from matroid_oracles.core.instance import Instance
from matroid_oracles.oracles.restricted import (
    MatroidPair,
    OracleKind,
    QueryCounters,
    QueryType,
    RestrictedOracle,
)

logger = logging.getLogger(__name__)

Cost = Union[int, float]


@dataclass(frozen=True)
class PathSeq:
    """Ordered distinct elements; the empty sequence is the null path of cost +inf."""

    elements: tuple[int, ...] = ()
    cost: Cost = math.inf

    @classmethod
    def start(cls, e: int, cost: Cost = 0) -> "PathSeq":
        return cls((e,), cost)

    @property
    def is_null(self) -> bool:
        return not self.elements

    @property
    def length(self) -> int:
        return len(self.elements)

    @property
    def last(self) -> int:
        return self.elements[-1]

    @property
    def mask(self) -> SubsetMask:
        return sum(bit(e) for e in self.elements)

    @property
    def key(self) -> tuple[Cost, int, tuple[int, ...]]:
        return (self.cost, self.length, self.elements)

    def contains(self, e: int) -> bool:
        return e in self.elements

    def extend(self, e: int, cost: Cost = 0) -> "PathSeq":
        return PathSeq(self.elements + (e,), self.cost + cost)


NULL_PATH = PathSeq()


@dataclass
class SolveReport:
    """Outcome of a full solve from the empty set.

    ``sets[k]`` is the w-maximal common independent set of size ``k`` found
    by the solver; sizes are contiguous from 0 to the maximum cardinality.
    """

    solver: str
    oracle_kind: OracleKind
    n: int
    weighted: bool
    sets: list[SubsetMask] = field(default_factory=list)
    weights: list[int] = field(default_factory=list)
    counters: QueryCounters = field(default_factory=QueryCounters)
    certificate: Optional[SubsetMask] = None
    certificate_value: Optional[int] = None

    @property
    def max_cardinality(self) -> int:
        return len(self.sets) - 1

    @property
    def augmentations(self) -> int:
        return self.max_cardinality

    @property
    def optimum_size(self) -> int:
        """Smallest size attaining the maximum weight."""
        best = max(self.weights)
        return self.weights.index(best)

    @property
    def optimum_set(self) -> SubsetMask:
        return self.sets[self.optimum_size]

    @property
    def optimum_weight(self) -> int:
        return self.weights[self.optimum_size]

    @property
    def max_cardinality_set(self) -> SubsetMask:
        return self.sets[-1]

    def to_dict(self) -> dict[str, Any]:
        return {
            "solver": self.solver,
            "oracle": self.oracle_kind.value,
            "n": self.n,
            "weighted": self.weighted,
            "per_size": [
                {"k": k, "set": elements(s), "weight": w}
                for k, (s, w) in enumerate(zip(self.sets, self.weights))
            ],
            "optimum": {
                "k": self.optimum_size,
                "set": elements(self.optimum_set),
                "weight": self.optimum_weight,
            },
            "max_cardinality": self.max_cardinality,
            "certificate": None if self.certificate is None else elements(self.certificate),
            "certificate_value": self.certificate_value,
            "queries": self.counters.to_dict(),
        }

    def stats(self) -> dict[str, Any]:
        """Per-solve stats record."""
        return {
            "oracle_kind": self.oracle_kind.value,
            "queries_by_type": self.counters.to_dict(),
            "augmentations": self.augmentations,
            "n": self.n,
        }


class BaseSolver(ABC):
    """Abstract base class for all matroid intersection solvers.

    A solver is bound to one oracle. Construction fails with
    ``CapabilityError`` before any query when the oracle kind cannot answer
    the queries the solver issues.

    Args:
        oracle: Oracle hiding the matroid pair.
        audit_pair: Full access used only for invariant assertions.
        depth_cap: Optional cap on search rounds (BFS emulation).
    """

    name: ClassVar[str]
    description: ClassVar[str]
    required_queries: ClassVar[tuple[QueryType, ...]]
    weighted: ClassVar[bool] = True
    structure: ClassVar[Optional[str]] = None  # declaration M_1 must carry

    def __init__(
        self,
        oracle: RestrictedOracle,
        audit_pair: Optional[MatroidPair] = None,
        depth_cap: Optional[int] = None,
    ) -> None:
        if not self.accepts(oracle.kind):
            raise CapabilityError(
                f"solver '{self.name}' cannot run on a {oracle.kind.value} oracle",
                kind=oracle.kind.value,
                required="+".join(q.value for q in self.required_queries),
            )
        self.oracle = oracle
        self.audit_pair = audit_pair
        self.depth_cap = depth_cap

    @classmethod
    def accepts(cls, kind: OracleKind) -> bool:
        return all(kind in RestrictedOracle.allowed_kinds(q) for q in cls.required_queries)

    @classmethod
    def native_kind(cls) -> OracleKind:
        """Narrowest oracle kind answering every required query."""
        for kind in (OracleKind.SUM, OracleKind.CI, OracleKind.CI_PLUS_MAX):
            if cls.accepts(kind):
                return kind
        return OracleKind.FULL_PAIR

    @classmethod
    def supports(cls, instance: Instance) -> bool:
        """Whether the instance declares the structure this solver trusts."""
        if cls.structure == "partition":
            return instance.declares_partition()
        if cls.structure == "split":
            return instance.declares_split()
        return True

    @abstractmethod
    def augment(self, i: SubsetMask, weights: Weighting) -> Optional[SubsetMask]:
        """One augmentation step from a w-maximal ``i``; None when ``i`` is maximum."""

    def _finish(self, report: SolveReport) -> None:
        """Hook run once the last augmentation failed."""

    def solve(self, weights: Optional[Weighting] = None) -> SolveReport:
        """Augment from the empty set until no larger common independent set exists."""
        n = self.oracle.n
        weighted = self.weighted and weights is not None
        if weights is None or not weighted:
            weights = Weighting.unit(n)
        weights.check_ground(self.oracle.ground)

        logger.info(f"Solving with {self.name} on a {self.oracle.kind.value} oracle (n={n})")
        report = SolveReport(
            solver=self.name,
            oracle_kind=self.oracle.kind,
            n=n,
            weighted=weighted,
            counters=self.oracle.counters,
        )
        i = 0
        report.sets.append(i)
        report.weights.append(0)
        while popcount(i) < n:
            j = self.augment(i, weights)
            if j is None:
                break
            i = j
            report.sets.append(i)
            report.weights.append(weights.of(i))
            logger.debug(f"Size {popcount(i)}: {format_mask(i)} weight {weights.of(i)}")
        self._finish(report)
        logger.info(
            f"Solved: max cardinality {report.max_cardinality}, optimum weight "
            f"{report.optimum_weight}, {report.counters.total} queries"
        )
        return report
