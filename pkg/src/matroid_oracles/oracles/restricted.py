"""Restricted oracles hiding a pair of matroids.

A ``RestrictedOracle`` is the only object in the toolkit allowed to evaluate
the hidden matroids on behalf of a restricted solver. Every query is counted.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

from matroid_oracles.core.errors import CapabilityError, ConstructionError
from matroid_oracles.core.ground import GroundSet, SubsetMask, popcount
from matroid_oracles.core.matroid import Matroid

logger = logging.getLogger(__name__)


class OracleKind(str, Enum):
    """Interface through which a matroid pair is exposed."""

    SUM = "sum"
    MIN = "min"
    MAX = "max"
    CI = "ci"
    CI_PLUS_MAX = "ci-max"
    FULL_PAIR = "full"


class QueryType(str, Enum):
    """Primitive query types, counted separately."""

    SUM = "sum"
    MIN = "min"
    MAX = "max"
    CI = "ci"


_ALLOWED: dict[QueryType, frozenset[OracleKind]] = {
    QueryType.SUM: frozenset({OracleKind.SUM, OracleKind.FULL_PAIR}),
    QueryType.MIN: frozenset({OracleKind.MIN, OracleKind.FULL_PAIR}),
    QueryType.MAX: frozenset({OracleKind.MAX, OracleKind.CI_PLUS_MAX, OracleKind.FULL_PAIR}),
    QueryType.CI: frozenset({OracleKind.CI, OracleKind.CI_PLUS_MAX, OracleKind.FULL_PAIR}),
}


def answer(kind: QueryType, r1: int, r2: int, cardinality: int) -> Union[int, bool]:
    """Oracle answer computed from the two ranks of a set of given size."""
    if kind is QueryType.SUM:
        return r1 + r2
    if kind is QueryType.MIN:
        return min(r1, r2)
    if kind is QueryType.MAX:
        return max(r1, r2)
    return r1 == cardinality and r2 == cardinality


@dataclass
class QueryCounters:
    """Per-query-type call counts, plus simulated shape queries."""

    sum: int = 0
    min: int = 0
    max: int = 0
    ci: int = 0
    shapes: dict[str, int] = field(default_factory=dict)

    def record(self, kind: QueryType) -> None:
        setattr(self, kind.value, getattr(self, kind.value) + 1)

    def record_shape(self, shape: str) -> None:
        self.shapes[shape] = self.shapes.get(shape, 0) + 1

    @property
    def total(self) -> int:
        return self.sum + self.min + self.max + self.ci

    def count(self, kind: QueryType) -> int:
        return int(getattr(self, kind.value))

    def to_dict(self) -> dict[str, int]:
        out = {"sum": self.sum, "min": self.min, "max": self.max, "ci": self.ci}
        for shape, value in sorted(self.shapes.items()):
            out[f"shape_{shape}"] = value
        return out

    def reset(self) -> None:
        self.sum = self.min = self.max = self.ci = 0
        self.shapes.clear()


@dataclass(frozen=True)
class MatroidPair:
    """Full access to both matroids (reference algorithms and audits)."""

    m1: Matroid
    m2: Matroid

    def __post_init__(self) -> None:
        if self.m1.n != self.m2.n:
            raise ConstructionError(
                "matroid pair needs a common ground set", {"m1": self.m1.n, "m2": self.m2.n}
            )

    @property
    def ground(self) -> GroundSet:
        return self.m1.ground

    @property
    def n(self) -> int:
        return self.m1.n

    def r1(self, x: SubsetMask) -> int:
        return self.m1.rank(x)

    def r2(self, x: SubsetMask) -> int:
        return self.m2.rank(x)

    def is_common_independent(self, x: SubsetMask) -> bool:
        return self.m1.is_independent(x) and self.m2.is_independent(x)

    def swapped(self) -> "MatroidPair":
        return MatroidPair(self.m2, self.m1)


class RestrictedOracle:
    """A matroid pair behind exactly one oracle kind.

    Args:
        pair: The hidden matroids.
        kind: Which queries may be asked.
    """

    def __init__(self, pair: MatroidPair, kind: OracleKind) -> None:
        self._pair = pair
        self.kind = kind
        self.counters = QueryCounters()

    @property
    def n(self) -> int:
        return self._pair.n

    @property
    def ground(self) -> GroundSet:
        return self._pair.ground

    @property
    def pair(self) -> MatroidPair:
        """Escape hatch to the hidden matroids, FullPair oracles only."""
        if self.kind is not OracleKind.FULL_PAIR:
            raise CapabilityError(
                "direct matroid access requires a full-pair oracle",
                kind=self.kind.value,
                required=OracleKind.FULL_PAIR.value,
            )
        return self._pair

    @staticmethod
    def allowed_kinds(query: QueryType) -> frozenset[OracleKind]:
        return _ALLOWED[query]

    def allows(self, query: QueryType) -> bool:
        return self.kind in _ALLOWED[query]

    def _ask(self, query: QueryType, x: SubsetMask) -> Union[int, bool]:
        if not self.allows(query):
            raise CapabilityError(
                f"{self.kind.value} oracle cannot answer {query.value} queries",
                kind=self.kind.value,
                required=query.value,
            )
        self._pair.ground.validate(x)
        self.counters.record(query)
        if query is QueryType.CI:
            return self._pair.is_common_independent(x)
        return answer(query, self._pair.r1(x), self._pair.r2(x), popcount(x))

    def query_sum(self, x: SubsetMask) -> int:
        """``r_1(x) + r_2(x)``."""
        return int(self._ask(QueryType.SUM, x))

    def query_min(self, x: SubsetMask) -> int:
        """``min(r_1(x), r_2(x))``."""
        return int(self._ask(QueryType.MIN, x))

    def query_max(self, x: SubsetMask) -> int:
        """``max(r_1(x), r_2(x))``."""
        return int(self._ask(QueryType.MAX, x))

    def query_ci(self, x: SubsetMask) -> bool:
        """Whether ``x`` is independent in both matroids."""
        return bool(self._ask(QueryType.CI, x))

    def __repr__(self) -> str:
        return f"RestrictedOracle(kind={self.kind.value}, n={self.n})"
