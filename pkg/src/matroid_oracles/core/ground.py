"""Ground sets, subset masks and integer weightings.

A subset of the ground set ``{0, ..., n-1}`` is an ``int`` whose bit ``e`` is
set iff element ``e`` belongs to it.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from matroid_oracles.core.errors import ConstructionError, ContractError

SubsetMask = int

MAX_GROUND_SIZE = 64
_INT64_MIN = -(2**63)
_INT64_MAX = 2**63 - 1


def bit(e: int) -> SubsetMask:
    """Singleton mask ``{e}``."""
    return 1 << e


def popcount(mask: SubsetMask) -> int:
    return mask.bit_count()


def elements(mask: SubsetMask) -> list[int]:
    """Elements of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(items: Iterable[int]) -> SubsetMask:
    mask = 0
    for e in items:
        mask |= 1 << e
    return mask


def format_mask(mask: SubsetMask) -> str:
    return "{" + ",".join(str(e) for e in elements(mask)) + "}"


@dataclass(frozen=True)
class GroundSet:
    """Finite ground set ``E = {0, ..., n-1}``."""

    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_GROUND_SIZE:
            raise ConstructionError(
                f"ground set size must lie in 1..{MAX_GROUND_SIZE}", {"n": self.n}
            )

    @property
    def full(self) -> SubsetMask:
        """Mask of the whole ground set."""
        return (1 << self.n) - 1

    def contains(self, mask: SubsetMask) -> bool:
        return mask >= 0 and mask & ~self.full == 0

    def validate(self, mask: SubsetMask) -> None:
        """Raise ContractError if ``mask`` has bits outside the ground set."""
        if not self.contains(mask):
            raise ContractError(
                "subset mask outside the ground set", {"n": self.n, "mask": mask}
            )

    def complement(self, mask: SubsetMask) -> SubsetMask:
        return self.full & ~mask

    def subsets(self) -> Iterator[SubsetMask]:
        """All ``2^n`` subsets in ascending mask order."""
        return iter(range(1 << self.n))

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class Weighting:
    """Signed 64-bit integer weight per element."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        for e, w in enumerate(self.values):
            if not isinstance(w, int) or not _INT64_MIN <= w <= _INT64_MAX:
                raise ConstructionError(
                    "weights must be 64-bit integers", {"element": e, "weight": w}
                )

    @classmethod
    def unit(cls, n: int) -> "Weighting":
        return cls(tuple([1] * n))

    @classmethod
    def zero(cls, n: int) -> "Weighting":
        return cls(tuple([0] * n))

    def check_ground(self, ground: GroundSet) -> None:
        if len(self.values) != ground.n:
            raise ContractError(
                "weighting length differs from ground set size",
                {"weights": len(self.values), "n": ground.n},
            )

    def of(self, mask: SubsetMask) -> int:
        """Total weight ``w(X)``."""
        return sum(self.values[e] for e in elements(mask))

    def __getitem__(self, e: int) -> int:
        return self.values[e]

    def __len__(self) -> int:
        return len(self.values)
