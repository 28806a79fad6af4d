"""Exception hierarchy shared by the whole package."""


class DeFinettiError(Exception):
    """Base class for every validation or computation error raised here."""


class LengthMismatchError(DeFinettiError):
    """A vector has the wrong length for the declared sequence length."""


class NegativeWeightError(DeFinettiError):
    """A probability weight is negative."""


class NotNormalizedError(DeFinettiError):
    """Probability weights do not sum to one (beyond tolerance in float mode)."""


class IndexOutOfRangeError(DeFinettiError):
    """An index or order parameter lies outside its admissible range."""


class DuplicateIndexError(DeFinettiError):
    """An assignment names the same coordinate twice."""


class EmptyTupleError(DeFinettiError):
    """An index tuple is empty."""


class EmptyVectorError(DeFinettiError):
    """A moment vector is empty."""


class TooLargeError(DeFinettiError):
    """An enumeration was requested beyond the brute-force size limit."""


class NotCompletelyMonotoneError(DeFinettiError):
    """A putative moment vector fails the alternating-difference screen."""


class NoConvergenceError(DeFinettiError):
    """The recovery solver exhausted its budget above the residual tolerance."""


class BadParamsError(DeFinettiError):
    """Parameters are invalid for the requested family or operation."""


class OutOfRangeError(DeFinettiError):
    """A scalar argument lies outside its admissible interval."""
