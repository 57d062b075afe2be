"""JSON reading and writing of instances.

The canonical form is the record dumped with sorted keys and two-space
indentation; ``emit_instance(parse_instance(t))`` is the canonical form of
``t``.
"""

import json
import logging
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from matroid_oracles.core.errors import InstanceFormatError, MatroidOracleError
from matroid_oracles.core.instance import Instance
from matroid_oracles.instances.schema import InstanceRecord, build_instance, instance_record

logger = logging.getLogger(__name__)


def _field_path(loc: tuple[Any, ...]) -> str:
    return ".".join(str(part) for part in loc)


def parse_record(text: str) -> InstanceRecord:
    """Validate instance text against the schema without building matroids.

    Raises:
        InstanceFormatError: On malformed JSON (line and column given) or a
            schema violation (field path given).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(
            f"malformed JSON: {e.msg}", {"line": e.lineno, "column": e.colno}
        ) from e
    try:
        return InstanceRecord.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise InstanceFormatError(
            f"schema violation: {first['msg']}",
            {"field": _field_path(first["loc"]), "errors": e.error_count()},
        ) from e


def parse_instance(text: str) -> Instance:
    """Parse and build an instance.

    Raises:
        InstanceFormatError: On JSON, schema or construction errors; the
            construction error is chained and its message kept.
    """
    record = parse_record(text)
    if len(record.weights) != record.n:
        raise InstanceFormatError(
            "weights length must equal n", {"field": "weights", "n": record.n}
        )
    try:
        instance = build_instance(record)
    except MatroidOracleError as e:
        raise InstanceFormatError(str(e), {"name": record.name}) from e
    logger.debug(f"Parsed instance '{record.name}' with n={record.n}")
    return instance


def emit_instance(instance: Instance) -> str:
    data = instance_record(instance).model_dump(mode="json", exclude_none=True)
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def load_instance(path: Path) -> Instance:
    return parse_instance(path.read_text(encoding="utf-8"))


def save_instance(instance: Instance, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_instance(instance), encoding="utf-8")
