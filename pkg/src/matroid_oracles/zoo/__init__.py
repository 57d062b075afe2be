"""Concrete matroid constructions."""

from matroid_oracles.zoo.catalog import reference_weightings, small_zoo
from matroid_oracles.zoo.matroids import (
    DirectSumMatroid,
    DisjointSet,
    GraphicMatroid,
    PartitionMatroid,
    SplitMatroid,
    TruncatedMatroid,
    UniformMatroid,
    direct_sum,
    make_free,
    make_graphic,
    make_partition,
    make_split,
    make_uniform,
    partition_from_labels,
    truncate,
)
from matroid_oracles.zoo.representations import (
    GraphRepresentation,
    PartitionRepresentation,
    SplitRepresentation,
)

__all__ = [
    "reference_weightings",
    "small_zoo",
    "DirectSumMatroid",
    "DisjointSet",
    "GraphicMatroid",
    "PartitionMatroid",
    "SplitMatroid",
    "TruncatedMatroid",
    "UniformMatroid",
    "direct_sum",
    "make_free",
    "make_graphic",
    "make_partition",
    "make_split",
    "make_uniform",
    "partition_from_labels",
    "truncate",
    "GraphRepresentation",
    "PartitionRepresentation",
    "SplitRepresentation",
]
