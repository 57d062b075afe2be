"""Instance file format, JSON codec and seeded generators."""

from matroid_oracles.instances.codec import (
    emit_instance,
    load_instance,
    parse_instance,
    parse_record,
    save_instance,
)
from matroid_oracles.instances.generator import (
    KINDS,
    GeneratorConfig,
    corpus,
    generate,
    matching_instance,
)
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
    build_matroid,
    instance_record,
    record_for,
)

__all__ = [
    "emit_instance",
    "load_instance",
    "parse_instance",
    "parse_record",
    "save_instance",
    "KINDS",
    "GeneratorConfig",
    "corpus",
    "generate",
    "matching_instance",
    "DirectSumRecord",
    "GraphicRecord",
    "InstanceRecord",
    "MatroidRecord",
    "PartitionRecord",
    "SplitRecord",
    "TruncationRecord",
    "UniformRecord",
    "build_instance",
    "build_matroid",
    "instance_record",
    "record_for",
]
