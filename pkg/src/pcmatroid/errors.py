"""Exception types shared across the package."""


class PcmError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(PcmError, ValueError):
    """An input violates a structural invariant.

    ``law`` names the violated invariant and ``witness`` holds the concrete
    offending values, when there are any.
    """

    def __init__(self, message, law=None, witness=None):
        super().__init__(message)
        self.law = law
        self.witness = witness


class UniverseMismatchError(ValidationError):
    """Two operands live over different universes."""

    def __init__(self, message="operands belong to different universes"):
        super().__init__(message, law="universe")


class CapacityError(PcmError):
    """A brute-force operation was asked to enumerate too large a universe."""
