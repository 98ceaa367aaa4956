"""Exception hierarchy shared by all qloop modules."""


class QloopError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(QloopError):
    """An argument violates a documented precondition."""


class SingularityError(QloopError):
    """An evaluation hit an excluded value (pole of the R-matrix)."""


class ConsistencyError(QloopError):
    """An internal cross-check failed (would indicate a genuine bug
    or a counterexample to the identities this package relies on)."""


class WindowTooSmallError(QloopError):
    """A repetition-quiver window was too small to hold a requested
    module; the caller should rebuild with a larger range."""


class CapExceededError(QloopError):
    """A bounded enumeration hit its cap (infinite or very large type)."""
