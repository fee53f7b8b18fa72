"""Exception hierarchy.

Errors that indicate an invalid *configuration* (rejected before any
computation starts) derive from :class:`InvalidConfigError`; the CLI maps
those to exit code 2.  Errors that indicate a *failed verification* map to
exit code 1.
"""


class SwansonError(Exception):
    """Base class for all library errors."""


class InvalidConfigError(SwansonError):
    """Configuration rejected before computation (CLI exit code 2)."""


class DomainError(InvalidConfigError):
    """A point or window lies outside the declared domain of a profile."""


class SingularityError(SwansonError):
    """An integrand or potential is singular inside the requested range."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class ComplexSpectrumError(InvalidConfigError):
    """A reality constraint is violated; the named inequality is the message."""

    def __init__(self, inequality):
        super().__init__(f"{inequality} violated")
        self.inequality = inequality


class NoBoundStateError(SwansonError):
    """The requested level does not exist (end of the bound spectrum)."""


class SingularLevelError(NoBoundStateError):
    """A closed-form level hits the pole of its own formula."""


class NotShapeInvariantError(SwansonError):
    """A candidate parameter step fails the remainder-constancy test."""

    def __init__(self, max_deviation, tol):
        super().__init__(
            f"remainder deviates from constancy by {max_deviation:.3e} (tol {tol:.1e})"
        )
        self.max_deviation = max_deviation
        self.tol = tol


class DegenerateParameterError(SwansonError):
    """A three-term-recurrence denominator vanished at an intermediate degree."""

    def __init__(self, k):
        super().__init__(
            f"recurrence denominator vanishes at degree k={k}; "
            "perturb the parameters by ~1e-12 and retry"
        )
        self.k = k


class ComplexExponentError(SwansonError):
    """A wavefunction exponent would be complex for the supplied gamma."""


class VerificationError(SwansonError):
    """A verification check failed (CLI exit code 1)."""
