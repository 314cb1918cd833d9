"""Exception types shared across the library.

Every error raised on purpose derives from CircsmithError, so callers can
catch one base class.  Exceptions that signal a violated precondition carry
a short message naming the offending argument.
"""


class CircsmithError(Exception):
    """Base class for all errors raised by circsmith."""


class NonUnitLeadingCoefficientError(CircsmithError):
    """Polynomial division needs a divisor whose leading coefficient is +-1."""


class NotMonicError(CircsmithError):
    """Operation requires a monic polynomial."""


class NotPrimeError(CircsmithError):
    """A modulus that must be prime failed the primality test."""


class ModulusMismatchError(CircsmithError):
    """Mixed arithmetic between polynomials over different prime fields."""


class BothZeroError(CircsmithError):
    """gcd of two zero polynomials is undefined."""


class IndexOutOfRangeError(CircsmithError, IndexError):
    """An index (Horner shift order, generator subscript, ...) is out of range."""


class FactorizationLimitError(CircsmithError):
    """Integer factorization gave up before the operation budget ran out."""


class EnumerationLimitError(CircsmithError):
    """Too many minors to enumerate within the configured cap."""


class NotSquareError(CircsmithError):
    """Operation requires a square matrix."""


class SingularMatrixError(CircsmithError):
    """Operation requires a nonsingular matrix."""


class ShapeMismatchError(CircsmithError):
    """Two matrices were expected to have the same shape."""


class ZeroNumeratorError(CircsmithError):
    """A quotient polynomial vanished where a nonzero value was required."""


class DegreeOrderError(CircsmithError):
    """Degree ordering precondition violated (expected deg f <= deg g)."""


class NotCoprimeError(CircsmithError):
    """A coprimality hypothesis does not hold.

    For the factor-split operations this is a soft signal: the caller is
    expected to skip the split, not to abort.
    """


class SingularSystemError(CircsmithError):
    """The linear system backing a determinantal-divisor formula is singular."""


class ParseError(CircsmithError):
    """Input text could not be parsed; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class HypothesisViolationError(CircsmithError):
    """A closed-form family formula was called outside its hypotheses."""
