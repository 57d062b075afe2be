"""Seeded random instance generation.

All randomness flows through one ``numpy.random.Generator`` seeded from the
config, so equal configs produce byte-identical instances.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from matroid_oracles.core.config import GeneratorSettings
from matroid_oracles.core.errors import RepresentationError
from matroid_oracles.core.ground import GroundSet, mask_of
from matroid_oracles.core.instance import Instance
from matroid_oracles.instances.schema import (
    DirectSumRecord,
    GraphicRecord,
    InstanceRecord,
    MatroidRecord,
    PartitionRecord,
    SplitRecord,
    TruncationRecord,
    UniformRecord,
    build_instance,
)
from matroid_oracles.zoo.representations import SplitRepresentation

logger = logging.getLogger(__name__)

KINDS = (
    "uniform",
    "partition",
    "partition-one",
    "graphic",
    "split",
    "truncation",
    "direct-sum",
)

SPLIT_ATTEMPTS = 50


@dataclass(frozen=True)
class GeneratorConfig:
    """Everything that determines a generated instance."""

    seed: int = 0
    n: int = 8
    m1_kinds: tuple[str, ...] = ("uniform", "partition", "graphic", "split", "truncation")
    m2_kinds: tuple[str, ...] = ("uniform", "partition", "graphic", "split", "truncation")
    weight_min: int = -5
    weight_max: int = 20

    def __post_init__(self) -> None:
        unknown = [k for k in self.m1_kinds + self.m2_kinds if k not in KINDS]
        if unknown:
            raise ValueError(f"Unknown matroid kinds: {unknown}")
        if not self.m1_kinds or not self.m2_kinds:
            raise ValueError("Each side needs at least one matroid kind")
        if self.weight_min > self.weight_max:
            raise ValueError("weight_min must not exceed weight_max")

    @classmethod
    def from_settings(cls, settings: GeneratorSettings, seed: int = 0) -> "GeneratorConfig":
        return cls(
            seed=seed,
            n=settings.n,
            m1_kinds=tuple(settings.m1_kinds),
            m2_kinds=tuple(settings.m2_kinds),
            weight_min=settings.weight_min,
            weight_max=settings.weight_max,
        )


def _partition_record(labels: list[int], capacities: list[int]) -> PartitionRecord:
    """Classes in order of first appearance of their label."""
    order: dict[int, int] = {}
    for label in labels:
        order.setdefault(label, len(order))
    classes: list[list[int]] = [[] for _ in order]
    for e, label in enumerate(labels):
        classes[order[label]].append(e)
    return PartitionRecord(classes=classes, capacities=capacities[: len(classes)])


def _random_partition(rng: np.random.Generator, n: int, all_one: bool) -> PartitionRecord:
    k = int(rng.integers(1, n + 1))
    labels = [int(v) for v in rng.integers(0, k, size=n)]
    record = _partition_record(labels, [1] * n)
    if all_one:
        return record
    capacities = [int(rng.integers(1, len(c) + 1)) for c in record.classes]
    return PartitionRecord(classes=record.classes, capacities=capacities)


def _random_graphic(rng: np.random.Generator, n: int) -> GraphicRecord:
    vertices = int(rng.integers(2, n + 2))
    edges = []
    for _ in range(n):
        u, v = sorted(int(x) for x in rng.choice(vertices, size=2, replace=False))
        edges.append((u, v))
    return GraphicRecord(vertices=vertices, edges=edges)


def _random_split(rng: np.random.Generator, n: int) -> SplitRecord:
    """Random elementary split representation, rejecting (H1)/(H2) failures."""
    ground = GroundSet(n)
    r = int(rng.integers(1, n + 1))
    q = int(rng.integers(0, 4))
    for _ in range(SPLIT_ATTEMPTS):
        hyperedges: list[list[int]] = []
        bounds: list[int] = []
        for _ in range(q):
            size = int(rng.integers(1, n + 1))
            low, high = max(1, r - (n - size)), min(size, r)
            hyperedges.append(sorted(int(e) for e in rng.choice(n, size=size, replace=False)))
            bounds.append(int(rng.integers(low, high + 1)))
        rep = SplitRepresentation(r, tuple(mask_of(h) for h in hyperedges), tuple(bounds))
        try:
            rep.validate(ground)
        except RepresentationError:
            continue
        return SplitRecord(r=r, hyperedges=hyperedges, bounds=bounds)
    logger.debug(f"Split generation fell back to a bare rank bound (n={n}, r={r})")
    return SplitRecord(r=r)


def _random_record(rng: np.random.Generator, kind: str, n: int) -> MatroidRecord:
    if kind == "uniform":
        return UniformRecord(r=int(rng.integers(1, n + 1)))
    if kind in ("partition", "partition-one"):
        return _random_partition(rng, n, all_one=kind == "partition-one")
    if kind == "graphic":
        return _random_graphic(rng, n)
    if kind == "split":
        return _random_split(rng, n)
    if kind == "truncation":
        inner_kind = ("graphic", "partition")[int(rng.integers(0, 2))]
        inner = _random_record(rng, inner_kind, n)
        return TruncationRecord(k=int(rng.integers(1, n + 1)), inner=inner)
    if n < 2:
        return UniformRecord(r=1)
    offset = int(rng.integers(1, n))
    left = _random_record(rng, ("uniform", "graphic")[int(rng.integers(0, 2))], offset)
    right = _random_record(rng, ("uniform", "partition")[int(rng.integers(0, 2))], n - offset)
    return DirectSumRecord(offset=offset, left=left, right=right)


def _pick(rng: np.random.Generator, kinds: tuple[str, ...]) -> str:
    return kinds[int(rng.integers(0, len(kinds)))]


def generate(config: GeneratorConfig) -> Instance:
    """Random instance determined entirely by ``config``."""
    rng = np.random.default_rng(config.seed)
    n = config.n
    kind1, kind2 = _pick(rng, config.m1_kinds), _pick(rng, config.m2_kinds)
    m1 = _random_record(rng, kind1, n)
    m2 = _random_record(rng, kind2, n)
    weights = [int(w) for w in rng.integers(config.weight_min, config.weight_max + 1, size=n)]
    record = InstanceRecord(n=n, weights=weights, m1=m1, m2=m2, name=f"gen-{config.seed}")
    instance = build_instance(record)
    instance.metadata.update({"seed": config.seed, "m1_kind": kind1, "m2_kind": kind2})
    return instance


def matching_instance(
    left: int,
    right: int,
    density: float = 0.5,
    seed: int = 0,
    weight_min: int = -5,
    weight_max: int = 20,
) -> Instance:
    """Bipartite matching as the intersection of two all-one partition matroids.

    Element ``e`` is the ``e``-th edge of a random bipartite graph; M_1 groups
    edges by their left endpoint and M_2 by their right endpoint.
    """
    rng = np.random.default_rng(seed)
    adjacency = rng.random((left, right)) < density
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(adjacency))]
    if not edges:
        edges = [(0, 0)]
    n = len(edges)
    weights = [int(w) for w in rng.integers(weight_min, weight_max + 1, size=n)]
    record = InstanceRecord(
        n=n,
        weights=weights,
        m1=_partition_record([u for u, _ in edges], [1] * n),
        m2=_partition_record([v for _, v in edges], [1] * n),
        name=f"matching-{left}x{right}-{seed}",
    )
    instance = build_instance(record)
    instance.metadata.update({"seed": seed, "edges": edges})
    return instance


def corpus(config: GeneratorConfig, size: int, max_n: Optional[int] = None) -> Iterator[Instance]:
    """``size`` instances with seeds ``config.seed, config.seed + 1, ...``.

    With ``max_n`` set, ground-set sizes cycle through ``1..max_n``.
    """
    for i in range(size):
        n = config.n if max_n is None else 1 + i % max_n
        yield generate(replace(config, seed=config.seed + i, n=n))
