"""Ground sets, the matroid abstraction, configuration and errors."""

from matroid_oracles.core.config import Settings, load_config
from matroid_oracles.core.errors import (
    BudgetExceededError,
    CapabilityError,
    ConstructionError,
    ContractError,
    InstanceFormatError,
    MatroidOracleError,
    RepresentationError,
)
from matroid_oracles.core.ground import (
    GroundSet,
    SubsetMask,
    Weighting,
    bit,
    elements,
    format_mask,
    mask_of,
    popcount,
)
from matroid_oracles.core.instance import Instance
from matroid_oracles.core.matroid import Matroid

__all__ = [
    "Settings",
    "load_config",
    "MatroidOracleError",
    "ConstructionError",
    "RepresentationError",
    "ContractError",
    "CapabilityError",
    "BudgetExceededError",
    "InstanceFormatError",
    "GroundSet",
    "SubsetMask",
    "Weighting",
    "bit",
    "elements",
    "format_mask",
    "mask_of",
    "popcount",
    "Instance",
    "Matroid",
]
