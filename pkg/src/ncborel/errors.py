"""Exception types shared across the package."""


class NcBorelError(Exception):
    """Base class for computation-domain errors."""


class ContextError(NcBorelError):
    """Operands belong to different parameter contexts."""


class UnsupportedDegreeError(NcBorelError):
    """An operator was applied to a form of a degree it does not handle."""


class NotClosedError(NcBorelError):
    """A primitive was requested for a form that is not closed."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DegreeError(NcBorelError):
    """Forms of incompatible degree were combined."""
