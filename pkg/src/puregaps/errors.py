"""Exception hierarchy for parameter validation and resource limits.

All arithmetic in this package is exact (arbitrary-precision integers),
so there is no silent overflow anywhere; errors below signal invalid
inputs or deliberately refused work, never numerical failure.
"""

from __future__ import annotations


class PureGapsError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(PureGapsError, ValueError):
    """Invalid curve, shape, or query parameters."""


class NotPrimePower(ParameterError):
    """q is not a prime power (and the unchecked escape was not used)."""


class NotDivisor(ParameterError):
    """m does not divide q + 1, so the quotient curve does not exist."""


class TooSmall(ParameterError):
    """A parameter is below its minimum (q >= 2, m >= 2, ...)."""


class NotCoprime(ParameterError):
    """gcd(m, r) != 1, so no Bezout pair a*r + b*m = 1 exists."""


class BadArity(ParameterError):
    """Tuple length out of range for the requested operation."""


class UnsupportedSupport(ParameterError):
    """A divisor touches a place outside P_1..P_q and infinity."""


class NotInteger(PureGapsError, ArithmeticError):
    """A closed form that must be integral failed its exact division."""


class PreconditionFailed(ParameterError):
    """Parameters violate a stated precondition of a closed form."""


class BoxTooLarge(PureGapsError, RuntimeError):
    """A search box exceeds the configured work limit."""
