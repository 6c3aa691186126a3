"""Exception types shared across the package."""


class Hlcd4Error(Exception):
    """Base class for all domain errors raised by this package."""


class LengthMismatchError(Hlcd4Error):
    """Two vectors that must have equal length do not."""


class DimensionMismatchError(Hlcd4Error):
    """Matrix shapes are not conformable for the requested operation."""


class RankDeficientError(Hlcd4Error):
    """A matrix that must have full row rank has dependent rows."""


class NotStandardFormError(Hlcd4Error):
    """A generator matrix was required in the shape (I_k | A) but is not."""


class ZeroVectorError(Hlcd4Error):
    """A vector that must be nonzero is the zero vector."""


class IsotropyError(Hlcd4Error):
    """A vector pair violates the self/mutual-orthogonality hypothesis.

    Carries the offending inner products so callers can report which of
    (x,x)_h, (y,y)_h, (x,y)_h is nonzero.
    """

    def __init__(self, message, xx, yy, xy):
        super().__init__(message)
        self.xx = xx
        self.yy = yy
        self.xy = xy


class AllCoordinatesDeletedError(Hlcd4Error):
    """Puncturing or shortening would delete every coordinate."""


class PreconditionError(Hlcd4Error):
    """An operation's precondition does not hold for the given code."""


class NotLcdError(Hlcd4Error):
    """The code has a nontrivial Hermitian hull where an LCD code is required."""


class BudgetExceededError(Hlcd4Error):
    """An enumeration budget ran out before the result was exact.

    ``upper_bound`` is the best (smallest) codeword weight seen so far.
    """

    def __init__(self, message, upper_bound):
        super().__init__(message)
        self.upper_bound = upper_bound


class TooLargeError(Hlcd4Error):
    """The instance is too large for the exhaustive oracle path."""


class ExhaustedRetriesError(Hlcd4Error):
    """Rejection sampling hit its retry cap."""


class NoPairExistsError(Hlcd4Error):
    """No isotropic vector pair exists at the requested length."""


class CodeFileError(Hlcd4Error):
    """A generator-matrix file does not conform to the expected format."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + loc)
        self.line = line
        self.column = column


class UnknownEntryError(Hlcd4Error):
    """A (length, dimension) pair is outside the bounds table coverage."""
