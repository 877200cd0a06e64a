"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for all krull errors."""


class ParseError(AlgebraError):
    """Bad ring or polynomial text. Carries the offending position."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class RingMismatchError(AlgebraError):
    """Operands live in different rings."""


class UnitIdealError(AlgebraError):
    """The unit ideal was passed where a proper ideal is required."""


class UnsupportedInputError(AlgebraError):
    """Input outside the supported domain (non-homogeneous, non-monomial, ...)."""


class NotStabilizedError(AlgebraError):
    """An integer series did not stabilize to a binomial polynomial in the window."""


class ResourceLimitError(AlgebraError):
    """A configurable resource cap (S-pair count, iteration cap) was exceeded."""


class SamplingError(AlgebraError):
    """Random sampling exhausted its retry budget."""
