"""Exception types shared across the package."""


class FusionCharError(Exception):
    """Base class for all errors raised by fusionchar."""


class DomainError(FusionCharError, ValueError):
    """An input lies outside the domain of an operation."""


class CapacityError(FusionCharError):
    """A computation would exceed a configured size cap.

    ``partial`` optionally carries whatever was computed before the cap hit.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class InconsistencyError(FusionCharError, RuntimeError):
    """An internal invariant failed; this indicates a bug, not bad input."""
