"""Restricted oracles and the rank-sum shape capability."""

from matroid_oracles.oracles.capability import (
    CiMaxBackend,
    SumBackend,
    SumQueryCapability,
    capability_for,
)
from matroid_oracles.oracles.restricted import (
    MatroidPair,
    OracleKind,
    QueryCounters,
    QueryType,
    RestrictedOracle,
    answer,
)

__all__ = [
    "CiMaxBackend",
    "SumBackend",
    "SumQueryCapability",
    "capability_for",
    "MatroidPair",
    "OracleKind",
    "QueryCounters",
    "QueryType",
    "RestrictedOracle",
    "answer",
]
