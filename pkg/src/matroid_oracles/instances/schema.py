"""Pydantic records for the instance file format.

Matroid records are a union discriminated by ``kind``. Subsets are stored as
ascending element lists, never as masks, so files stay readable.
"""

from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, StrictInt

from matroid_oracles.core.errors import ConstructionError
from matroid_oracles.core.ground import Weighting, elements, mask_of
from matroid_oracles.core.instance import Instance
from matroid_oracles.core.matroid import Matroid
from matroid_oracles.zoo.matroids import (
    DirectSumMatroid,
    GraphicMatroid,
    PartitionMatroid,
    SplitMatroid,
    TruncatedMatroid,
    UniformMatroid,
    direct_sum,
    make_graphic,
    make_partition,
    make_split,
    make_uniform,
    truncate,
)
from matroid_oracles.zoo.representations import (
    GraphRepresentation,
    PartitionRepresentation,
    SplitRepresentation,
)


class _Record(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class UniformRecord(_Record):
    kind: Literal["uniform"] = "uniform"
    r: int


class PartitionRecord(_Record):
    kind: Literal["partition"] = "partition"
    classes: list[list[NonNegativeInt]]
    capacities: list[int]


class GraphicRecord(_Record):
    kind: Literal["graphic"] = "graphic"
    vertices: int = Field(ge=1)
    edges: list[tuple[NonNegativeInt, NonNegativeInt]]


class SplitRecord(_Record):
    kind: Literal["split"] = "split"
    r: int
    hyperedges: list[list[NonNegativeInt]] = Field(default_factory=list)
    bounds: list[int] = Field(default_factory=list)


class TruncationRecord(_Record):
    kind: Literal["truncation-of"] = "truncation-of"
    k: int
    inner: "MatroidRecord"


class DirectSumRecord(_Record):
    """Right summand elements are shifted by ``offset``, the left summand size."""

    kind: Literal["direct-sum-of"] = "direct-sum-of"
    offset: int = Field(ge=1)
    left: "MatroidRecord"
    right: "MatroidRecord"


MatroidRecord = Annotated[
    Union[
        UniformRecord,
        PartitionRecord,
        GraphicRecord,
        SplitRecord,
        TruncationRecord,
        DirectSumRecord,
    ],
    Field(discriminator="kind"),
]

TruncationRecord.model_rebuild()
DirectSumRecord.model_rebuild()


class InstanceRecord(_Record):
    """Top-level instance file."""

    n: int = Field(ge=1, le=64)
    weights: list[StrictInt]
    m1: MatroidRecord
    m2: MatroidRecord
    name: str = ""
    annotation: Optional[dict[str, Any]] = None


def build_matroid(record: MatroidRecord, n: int) -> Matroid:
    """Construct the zoo matroid a record describes on ``n`` elements.

    Raises:
        ConstructionError: If the payload is invalid for the zoo constructor.
    """
    if isinstance(record, UniformRecord):
        return make_uniform(n, record.r)
    if isinstance(record, PartitionRecord):
        rep = PartitionRepresentation(
            tuple(mask_of(c) for c in record.classes), tuple(record.capacities)
        )
        return make_partition(n, rep)
    if isinstance(record, GraphicRecord):
        if len(record.edges) != n:
            raise ConstructionError(
                "graph needs one edge per element", {"edges": len(record.edges), "n": n}
            )
        return make_graphic(GraphRepresentation(record.vertices, tuple(record.edges)))
    if isinstance(record, SplitRecord):
        rep = SplitRepresentation(
            record.r, tuple(mask_of(h) for h in record.hyperedges), tuple(record.bounds)
        )
        return make_split(n, rep)
    if isinstance(record, TruncationRecord):
        return truncate(build_matroid(record.inner, n), record.k)
    if record.offset >= n:
        raise ConstructionError(
            "direct-sum offset must leave room for the right summand",
            {"offset": record.offset, "n": n},
        )
    left = build_matroid(record.left, record.offset)
    return direct_sum(left, build_matroid(record.right, n - record.offset))


def record_for(m: Matroid) -> MatroidRecord:
    """Declarative record of a zoo matroid.

    Raises:
        ConstructionError: For matroids outside the zoo.
    """
    if isinstance(m, UniformMatroid):
        return UniformRecord(r=m.r)
    if isinstance(m, PartitionMatroid):
        rep = m.representation
        return PartitionRecord(
            classes=[elements(c) for c in rep.classes], capacities=list(rep.capacities)
        )
    if isinstance(m, GraphicMatroid):
        graph = m.representation
        return GraphicRecord(vertices=graph.vertex_count, edges=list(graph.edges))
    if isinstance(m, SplitMatroid):
        split = m.representation
        return SplitRecord(
            r=split.r,
            hyperedges=[elements(h) for h in split.hyperedges],
            bounds=list(split.bounds),
        )
    if isinstance(m, TruncatedMatroid):
        return TruncationRecord(k=m.k, inner=record_for(m.inner))
    if isinstance(m, DirectSumMatroid):
        return DirectSumRecord(
            offset=m.offset, left=record_for(m.left), right=record_for(m.right)
        )
    raise ConstructionError("matroid has no record form", {"kind": m.kind})


def build_instance(record: InstanceRecord) -> Instance:
    """Instance carrying its records, so M_1's declaration survives."""
    return Instance(
        m1=build_matroid(record.m1, record.n),
        m2=build_matroid(record.m2, record.n),
        weights=Weighting(tuple(record.weights)),
        name=record.name,
        m1_record=record.m1,
        m2_record=record.m2,
        annotation=record.annotation,
    )


def instance_record(instance: Instance) -> InstanceRecord:
    return InstanceRecord(
        n=instance.n,
        weights=list(instance.weights.values),
        m1=instance.m1_record if instance.m1_record is not None else record_for(instance.m1),
        m2=instance.m2_record if instance.m2_record is not None else record_for(instance.m2),
        name=instance.name,
        annotation=instance.annotation,
    )
