"""Exception types shared across the package."""


class EvocdError(Exception):
    """Base class for all package errors."""


class ParseError(EvocdError):
    """Malformed input data. Carries the offending line number when known."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class EmptyGraphError(EvocdError):
    """Graph has no edges after cleaning; the objectives divide by m."""


class ConfigError(EvocdError):
    """Invalid run configuration or infeasible benchmark spec."""


class ContractViolation(EvocdError):
    """A caller broke an internal API contract (mismatched sizes, stale state)."""
