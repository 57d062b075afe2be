"""Concrete matroid constructions.

Every constructor validates its payload and rejects loops, so the produced
matroids satisfy the loopless invariant of the core abstraction.
"""

import logging
from typing import Optional

from matroid_oracles.core.errors import ConstructionError
from matroid_oracles.core.ground import GroundSet, SubsetMask, elements, popcount
from matroid_oracles.core.matroid import Matroid
from matroid_oracles.zoo.representations import (
    GraphRepresentation,
    PartitionRepresentation,
    SplitRepresentation,
)

logger = logging.getLogger(__name__)


class DisjointSet:
    """Union-find with path compression and union by rank."""

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of ``x`` and ``y``; False if already merged (cycle)."""
        xroot, yroot = self.find(x), self.find(y)
        if xroot == yroot:
            return False
        if self.rank[xroot] < self.rank[yroot]:
            xroot, yroot = yroot, xroot
        self.parent[yroot] = xroot
        if self.rank[xroot] == self.rank[yroot]:
            self.rank[xroot] += 1
        return True


class UniformMatroid(Matroid):
    """U(r, n): every set of at most ``r`` elements is independent."""

    def __init__(self, n: int, r: int) -> None:
        super().__init__(GroundSet(n))
        if not 0 <= r <= n:
            raise ConstructionError("uniform rank must satisfy 0 <= r <= n", {"n": n, "r": r})
        if r == 0:
            raise ConstructionError("rank-0 uniform matroid consists of loops", {"n": n})
        self.r = r

    @property
    def kind(self) -> str:
        return "uniform"

    def _independent(self, x: SubsetMask) -> bool:
        return popcount(x) <= self.r

    def __repr__(self) -> str:
        return f"UniformMatroid(n={self.n}, r={self.r})"


class PartitionMatroid(Matroid):
    """At most ``cap_j`` elements from each class ``j``."""

    def __init__(self, n: int, rep: PartitionRepresentation) -> None:
        super().__init__(GroundSet(n))
        rep.validate(self.ground)
        self.representation = rep

    @property
    def kind(self) -> str:
        return "partition"

    @property
    def is_all_one(self) -> bool:
        return self.representation.is_all_one

    def _independent(self, x: SubsetMask) -> bool:
        rep = self.representation
        return all(popcount(x & cls) <= cap for cls, cap in zip(rep.classes, rep.capacities))


class GraphicMatroid(Matroid):
    """Forests of a multigraph; element ``i`` is edge ``i``."""

    def __init__(self, rep: GraphRepresentation) -> None:
        super().__init__(GroundSet(len(rep.edges)))
        rep.validate(self.ground)
        self.representation = rep

    @property
    def kind(self) -> str:
        return "graphic"

    def _independent(self, x: SubsetMask) -> bool:
        forest = DisjointSet(self.representation.vertex_count)
        edges = self.representation.edges
        for e in elements(x):
            u, v = edges[e]
            if not forest.union(u, v):
                return False
        return True


class SplitMatroid(Matroid):
    """Elementary split matroid given by a validated hypergraph representation."""

    def __init__(self, n: int, rep: SplitRepresentation) -> None:
        super().__init__(GroundSet(n))
        rep.validate(self.ground)
        self.representation = rep

    @property
    def kind(self) -> str:
        return "split"

    def _independent(self, x: SubsetMask) -> bool:
        rep = self.representation
        if popcount(x) > rep.r:
            return False
        return all(popcount(x & h) <= b for h, b in zip(rep.hyperedges, rep.bounds))

    def formula_rank(self, z: SubsetMask) -> int:
        """Closed-form rank ``min{r, |Z|, min_i(|Z \\ H_i| + r_i)}``."""
        self.ground.validate(z)
        rep = self.representation
        value = min(rep.r, popcount(z))
        for h, b in zip(rep.hyperedges, rep.bounds):
            value = min(value, popcount(z & ~h) + b)
        return value

    def tight_hyperedges(self, f: SubsetMask) -> list[int]:
        """Indices ``i`` with ``|F ∩ H_i| = r_i``."""
        rep = self.representation
        pairs = zip(rep.hyperedges, rep.bounds)
        return [i for i, (h, b) in enumerate(pairs) if popcount(f & h) == b]


class TruncatedMatroid(Matroid):
    """k-truncation: independent sets of ``inner`` with at most ``k`` elements."""

    def __init__(self, inner: Matroid, k: int) -> None:
        super().__init__(inner.ground)
        if k < 1:
            raise ConstructionError("truncation below 1 turns every element into a loop", {"k": k})
        self.inner = inner
        self.k = k

    @property
    def kind(self) -> str:
        return "truncation"

    def _independent(self, x: SubsetMask) -> bool:
        return popcount(x) <= self.k and self.inner._independent(x)


class DirectSumMatroid(Matroid):
    """Direct sum; the right summand is relabelled by ``offset = left.n``."""

    def __init__(self, left: Matroid, right: Matroid) -> None:
        super().__init__(GroundSet(left.n + right.n))
        self.left = left
        self.right = right
        self.offset = left.n

    @property
    def kind(self) -> str:
        return "direct-sum"

    def _independent(self, x: SubsetMask) -> bool:
        low = x & self.left.ground.full
        return self.left._independent(low) and self.right._independent(x >> self.offset)


def make_uniform(n: int, r: int) -> UniformMatroid:
    return UniformMatroid(n, r)


def make_free(n: int) -> UniformMatroid:
    """Free matroid: every subset independent."""
    return UniformMatroid(n, n)


def make_partition(n: int, rep: PartitionRepresentation) -> PartitionMatroid:
    return PartitionMatroid(n, rep)


def make_graphic(rep: GraphRepresentation) -> GraphicMatroid:
    return GraphicMatroid(rep)


def make_split(n: int, rep: SplitRepresentation) -> SplitMatroid:
    matroid = SplitMatroid(n, rep)
    logger.debug(
        f"Built split matroid n={n} r={rep.r} with {len(rep.hyperedges)} hyperedges"
    )
    return matroid


def truncate(m: Matroid, k: int) -> Matroid:
    """k-truncation; ``k >= n`` leaves the independence family unchanged."""
    return TruncatedMatroid(m, k)


def direct_sum(m1: Matroid, m2: Matroid) -> DirectSumMatroid:
    return DirectSumMatroid(m1, m2)


def partition_from_labels(
    labels: list[int], capacities: Optional[list[int]] = None
) -> PartitionMatroid:
    """Partition matroid whose class of element ``e`` is ``labels[e]``.

    Class indices are renumbered in order of first appearance. Capacities
    default to the all-one flavour.
    """
    order: dict[int, int] = {}
    for label in labels:
        order.setdefault(label, len(order))
    classes = [0] * len(order)
    for e, label in enumerate(labels):
        classes[order[label]] |= 1 << e
    caps = tuple(capacities) if capacities is not None else tuple([1] * len(classes))
    return PartitionMatroid(len(labels), PartitionRepresentation(tuple(classes), caps))
