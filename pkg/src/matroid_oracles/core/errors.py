"""Exception hierarchy for the matroid intersection toolkit."""

from typing import Any, Optional


class MatroidOracleError(Exception):
    """Base exception for every error raised by the toolkit.

    Attributes:
        message: Explanation of the failure
        details: Structured context (offending indices, sizes, kinds)
    """

    label = "Error"

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        parts = [f"{self.label}: {self.message}"]
        if self.details:
            rendered = ", ".join(f"{k}={v}" for k, v in self.details.items())
            parts.append(f"Details: {rendered}")
        return " | ".join(parts)


class ConstructionError(MatroidOracleError):
    """A ground set or matroid could not be constructed."""

    label = "Construction failed"


class RepresentationError(ConstructionError):
    """An elementary split representation violates (H1) or (H2)."""

    label = "Invalid split representation"


class ContractError(MatroidOracleError):
    """An operation was called with its precondition violated."""

    label = "Contract violated"


class CapabilityError(MatroidOracleError):
    """An oracle was asked a question its kind cannot answer."""

    label = "Capability missing"

    def __init__(self, message: str, kind: Optional[str] = None, required: Optional[str] = None):
        details: dict[str, Any] = {}
        if kind is not None:
            details["kind"] = kind
        if required is not None:
            details["required"] = required
        super().__init__(message, details)


class BudgetExceededError(MatroidOracleError):
    """Brute-force enumeration would exceed the configured budget."""

    label = "Budget exceeded"


class InstanceFormatError(MatroidOracleError):
    """An instance file failed to parse or validate."""

    label = "Invalid instance"
