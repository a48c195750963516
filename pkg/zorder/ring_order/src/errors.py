"""Exceptions raised by the ring_order package.

Every exception derives from the builtin type a caller would expect (ValueError for bad input,
RuntimeError for failures at runtime), so plain `except ValueError` keeps working.
"""


class ZorderError(Exception):
    """Base class of all zorder errors."""


class InvalidModulusError(ZorderError, ValueError):
    """The modulus is not a positive integer or exceeds the supported range."""


class InvalidResidueError(ZorderError, ValueError):
    """A residue is outside [0, n)."""


class NotADivisorError(ZorderError, ValueError):
    """An ideal or coset generator does not divide the modulus."""


class NotGeneralizedProjectionError(ZorderError, ValueError):
    """A GP-only operation received an element outside GP(Z_n)."""


class NotAProjectionError(ZorderError, ValueError):
    """A projection criterion received a non-idempotent element or 1."""


class PreconditionError(ZorderError, ValueError):
    """The documented precondition of an operation does not hold."""


class TheoremViolationError(ZorderError, RuntimeError):
    """A property guaranteed by a theorem failed. This always indicates a bug."""


class CapExceededError(ZorderError, RuntimeError):
    """A resource guard refused a request that is larger than the configured cap."""

    def __init__(self, cap_name: str, limit: int, requested: int):
        super().__init__(f"{cap_name} cap exceeded: requested {requested}, limit is {limit}")
        self.cap_name = cap_name
        self.limit = limit
        self.requested = requested
