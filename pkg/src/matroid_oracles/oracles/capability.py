"""The four rank-sum question shapes and their two realizations.

The rank-sum solver only ever asks, for a common independent ``I'`` and an
element ``x`` outside it, whether ``r_sum(I' + x)`` equals ``2|I'|``,
``2|I'| + 1`` or ``2|I'| + 2`` (shapes a, b, c), and whether
``r_sum(I') = 2|I'|`` for an arbitrary ``I'`` (shape d). ``SumBackend``
answers each with one rank-sum query; ``CiMaxBackend`` answers them with
common-independence and maximum-rank queries.
"""

import logging
from abc import ABC, abstractmethod
from typing import Optional

from matroid_oracles.core.errors import CapabilityError, ContractError
from matroid_oracles.core.ground import SubsetMask, bit, format_mask, popcount
from matroid_oracles.oracles.restricted import (
    MatroidPair,
    OracleKind,
    QueryType,
    RestrictedOracle,
)

logger = logging.getLogger(__name__)


class SumQueryCapability(ABC):
    """Answers shape (a)-(d) questions about a hidden matroid pair.

    Args:
        oracle: Restricted oracle queried for every answer.
        audit_pair: Optional full access used only to assert shape
            preconditions; it never contributes to an answer.
    """

    required: tuple[QueryType, ...] = ()

    def __init__(self, oracle: RestrictedOracle, audit_pair: Optional[MatroidPair] = None) -> None:
        missing = [q for q in self.required if not oracle.allows(q)]
        if missing:
            raise CapabilityError(
                f"{type(self).__name__} needs {', '.join(q.value for q in missing)} queries",
                kind=oracle.kind.value,
                required="+".join(q.value for q in self.required),
            )
        self.oracle = oracle
        self.audit_pair = audit_pair

    @property
    def n(self) -> int:
        return self.oracle.n

    def _check_extension(self, i_prime: SubsetMask, x: int) -> None:
        if self.audit_pair is None:
            return
        if i_prime >> x & 1:
            raise ContractError("shape query element already in I'", {"x": x})
        if not self.audit_pair.is_common_independent(i_prime):
            raise ContractError(
                "shape query on a set that is not common independent",
                {"i_prime": format_mask(i_prime)},
            )

    def shape_a(self, i_prime: SubsetMask, x: int) -> bool:
        """Whether ``r_sum(I' + x) = 2|I'|``."""
        self._check_extension(i_prime, x)
        self.oracle.counters.record_shape("a")
        return self._shape_a(i_prime, x)

    def shape_b(self, i_prime: SubsetMask, x: int) -> bool:
        """Whether ``r_sum(I' + x) = 2|I'| + 1``."""
        self._check_extension(i_prime, x)
        self.oracle.counters.record_shape("b")
        return self._shape_b(i_prime, x)

    def shape_c(self, i_prime: SubsetMask, x: int) -> bool:
        """Whether ``r_sum(I' + x) = 2|I'| + 2``."""
        self._check_extension(i_prime, x)
        self.oracle.counters.record_shape("c")
        return self._shape_c(i_prime, x)

    def shape_d(self, i_prime: SubsetMask) -> bool:
        """Whether ``r_sum(I') = 2|I'|``, i.e. ``I'`` is common independent."""
        self.oracle.counters.record_shape("d")
        return self._shape_d(i_prime)

    def in_sources_or_sinks(self, i: SubsetMask, s: int) -> bool:
        """Membership of ``s`` in ``S_I ∪ T_I``: ``r_sum(I + s) >= 2|I| + 1``."""
        return not self.shape_a(i, s)

    @abstractmethod
    def _shape_a(self, i_prime: SubsetMask, x: int) -> bool: ...

    @abstractmethod
    def _shape_b(self, i_prime: SubsetMask, x: int) -> bool: ...

    @abstractmethod
    def _shape_c(self, i_prime: SubsetMask, x: int) -> bool: ...

    @abstractmethod
    def _shape_d(self, i_prime: SubsetMask) -> bool: ...


class SumBackend(SumQueryCapability):
    """One rank-sum query per shape."""

    required = (QueryType.SUM,)

    def _shape_a(self, i_prime: SubsetMask, x: int) -> bool:
        return self.oracle.query_sum(i_prime | bit(x)) == 2 * popcount(i_prime)

    def _shape_b(self, i_prime: SubsetMask, x: int) -> bool:
        return self.oracle.query_sum(i_prime | bit(x)) == 2 * popcount(i_prime) + 1

    def _shape_c(self, i_prime: SubsetMask, x: int) -> bool:
        return self.oracle.query_sum(i_prime | bit(x)) == 2 * popcount(i_prime) + 2

    def _shape_d(self, i_prime: SubsetMask) -> bool:
        return self.oracle.query_sum(i_prime) == 2 * popcount(i_prime)


class CiMaxBackend(SumQueryCapability):
    """Shapes from common-independence and maximum-rank queries.

    With ``I'`` common independent, ``r_sum(I' + x)`` is ``2|I'| + 2`` exactly
    when ``I' + x`` is common independent; otherwise one matroid keeps rank
    ``|I'|`` and the maximum rank tells the other one's value.
    """

    required = (QueryType.CI, QueryType.MAX)

    def _shape_a(self, i_prime: SubsetMask, x: int) -> bool:
        extended = i_prime | bit(x)
        if self.oracle.query_ci(extended):
            return False
        return self.oracle.query_max(extended) == popcount(i_prime)

    def _shape_b(self, i_prime: SubsetMask, x: int) -> bool:
        extended = i_prime | bit(x)
        if self.oracle.query_ci(extended):
            return False
        return self.oracle.query_max(extended) == popcount(i_prime) + 1

    def _shape_c(self, i_prime: SubsetMask, x: int) -> bool:
        return self.oracle.query_ci(i_prime | bit(x))

    def _shape_d(self, i_prime: SubsetMask) -> bool:
        return self.oracle.query_ci(i_prime)


def capability_for(
    oracle: RestrictedOracle, audit_pair: Optional[MatroidPair] = None
) -> SumQueryCapability:
    """Pick the shape backend matching the oracle kind."""
    if oracle.kind in (OracleKind.SUM, OracleKind.FULL_PAIR):
        return SumBackend(oracle, audit_pair)
    if oracle.kind is OracleKind.CI_PLUS_MAX:
        return CiMaxBackend(oracle, audit_pair)
    raise CapabilityError(
        "rank-sum shape queries need a sum or ci+max oracle",
        kind=oracle.kind.value,
        required="sum | ci+max",
    )
