"""
Exception types for gammalab.

Every error the library raises on purpose derives from GammaLabError, and
also from the matching built-in type, so callers can catch either.

- DomainError: the input lies outside the supported domain
- PoleError: the input is a pole of the gamma function
- RangeError: the result does not fit in double precision
- PreconditionError: a size or cap requirement between arguments is violated
"""

from typing import Optional


class GammaLabError(Exception):
    """Base class for all gammalab errors."""


class DomainError(GammaLabError, ValueError):
    """Raised when an argument is outside the supported domain."""


class PoleError(DomainError):
    """Raised when an argument is a pole of Gamma (z = 0, -1, -2, ...)."""


class PreconditionError(GammaLabError, ValueError):
    """Raised when arguments are valid alone but inconsistent together."""


class RangeError(GammaLabError, OverflowError):
    """
    Raised when a result leaves the double range: Gamma(z) overflowing or
    underflowing, or a series sum that is not finite.

    The log-domain value is kept when there is one, so callers can still
    report it.
    """

    def __init__(self, message: str, log_value: Optional[complex] = None):
        super().__init__(message)
        self.log_value = log_value
