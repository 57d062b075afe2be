"""Problem instance: two matroids on a common ground set plus weights."""

from dataclasses import dataclass, field
from typing import Any, Optional

from matroid_oracles.core.errors import ConstructionError
from matroid_oracles.core.ground import GroundSet, Weighting
from matroid_oracles.core.matroid import Matroid


@dataclass
class Instance:
    """Unit of solving, serialization and verification.

    ``m1_record`` / ``m2_record`` keep the declarative payloads the matroids
    were built from (``None`` for programmatic instances); the structural
    declaration of M_1 is read from them.
    """

    m1: Matroid
    m2: Matroid
    weights: Weighting
    name: str = ""
    m1_record: Optional[Any] = None
    m2_record: Optional[Any] = None
    metadata: dict[str, Any] = field(default_factory=dict)
    annotation: Optional[dict[str, Any]] = None

    def __post_init__(self) -> None:
        if self.m1.n != self.m2.n:
            raise ConstructionError(
                "matroids live on different ground sets", {"m1": self.m1.n, "m2": self.m2.n}
            )
        if len(self.weights) != self.m1.n:
            raise ConstructionError(
                "weights length must equal n", {"weights": len(self.weights), "n": self.m1.n}
            )

    @property
    def n(self) -> int:
        return self.m1.n

    @property
    def ground(self) -> GroundSet:
        return self.m1.ground

    @property
    def m1_kind(self) -> str:
        if self.m1_record is not None:
            return str(self.m1_record.kind)
        return self.m1.kind

    def declares_partition(self) -> bool:
        """True when M_1 is declared as an all-one partition matroid."""
        if self.m1_kind != "partition":
            return False
        return all(cap == 1 for cap in self._m1_capacities())

    def declares_split(self) -> bool:
        """True when M_1 is declared as an elementary split matroid."""
        return self.m1_kind == "split"

    def _m1_capacities(self) -> list[int]:
        if self.m1_record is not None:
            return list(self.m1_record.capacities)
        return list(getattr(self.m1, "representation").capacities)
