"""Construction payloads for the concrete matroid classes."""

from dataclasses import dataclass

from matroid_oracles.core.errors import ConstructionError, RepresentationError
from matroid_oracles.core.ground import GroundSet, SubsetMask, popcount


@dataclass(frozen=True)
class PartitionRepresentation:
    """Disjoint classes covering the ground set, each with a capacity."""

    classes: tuple[SubsetMask, ...]
    capacities: tuple[int, ...]

    @property
    def is_all_one(self) -> bool:
        return all(cap == 1 for cap in self.capacities)

    def validate(self, ground: GroundSet) -> None:
        if len(self.classes) != len(self.capacities):
            raise ConstructionError(
                "one capacity per partition class required",
                {"classes": len(self.classes), "capacities": len(self.capacities)},
            )
        covered = 0
        for j, (cls, cap) in enumerate(zip(self.classes, self.capacities)):
            ground.validate(cls)
            if cls == 0:
                raise ConstructionError("partition class is empty", {"class": j})
            if cls & covered:
                raise ConstructionError("partition classes overlap", {"class": j})
            if cap < 1:
                raise ConstructionError(
                    "capacity below 1 makes the class elements loops", {"class": j, "capacity": cap}
                )
            covered |= cls
        if covered != ground.full:
            raise ConstructionError(
                "partition classes do not cover the ground set",
                {"missing": ground.full & ~covered},
            )


@dataclass(frozen=True)
class GraphRepresentation:
    """Multigraph whose edge ``i`` is ground-set element ``i``."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def validate(self, ground: GroundSet) -> None:
        if len(self.edges) != ground.n:
            raise ConstructionError(
                "graph needs one edge per element", {"edges": len(self.edges), "n": ground.n}
            )
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ConstructionError("edge endpoint out of range", {"edge": i})
            if u == v:
                raise ConstructionError("self-loop edges are loops of the matroid", {"edge": i})


@dataclass(frozen=True)
class SplitRepresentation:
    """Hypergraph representation of an elementary split matroid.

    Independent sets are the ``X`` with ``|X| <= r`` and
    ``|X ∩ H_i| <= r_i`` for every hyperedge.
    """

    r: int
    hyperedges: tuple[SubsetMask, ...] = ()
    bounds: tuple[int, ...] = ()

    def validate(self, ground: GroundSet) -> None:
        """Check (H1), (H2), bound ranges and looplessness.

        Raises:
            RepresentationError: Naming the offending pair or index.
            ConstructionError: If the representation would create loops.
        """
        if len(self.hyperedges) != len(self.bounds):
            raise RepresentationError(
                "one bound per hyperedge required",
                {"hyperedges": len(self.hyperedges), "bounds": len(self.bounds)},
            )
        if not 0 <= self.r <= ground.n:
            raise RepresentationError("rank bound r must satisfy 0 <= r <= n", {"r": self.r})
        for i, (h, b) in enumerate(zip(self.hyperedges, self.bounds)):
            ground.validate(h)
            if b < 0:
                raise RepresentationError("hyperedge bound is negative", {"index": i, "bound": b})
            if popcount(ground.full & ~h) + b < self.r:
                raise RepresentationError(
                    f"(H2) violated at hyperedge {i}: |E \\ H_{i}| + r_{i} < r",
                    {"index": i, "outside": popcount(ground.full & ~h), "bound": b, "r": self.r},
                )
        q = len(self.hyperedges)
        for i in range(q):
            for j in range(i + 1, q):
                common = popcount(self.hyperedges[i] & self.hyperedges[j])
                if common > self.bounds[i] + self.bounds[j] - self.r:
                    raise RepresentationError(
                        f"(H1) violated for hyperedges {i} and {j}: "
                        f"|H_{i} ∩ H_{j}| > r_{i} + r_{j} - r",
                        {"pair": (i, j), "intersection": common},
                    )
        if self.r < 1:
            raise ConstructionError("rank bound 0 makes every element a loop", {"r": self.r})
        for i, (h, b) in enumerate(zip(self.hyperedges, self.bounds)):
            if h and b < 1:
                raise ConstructionError(
                    "bound 0 on a nonempty hyperedge creates loops", {"index": i}
                )
