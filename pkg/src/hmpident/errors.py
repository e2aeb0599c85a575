"""Exception types raised by the identification pipeline.

Everything derives from ValueError so callers that do not care about the
fine-grained category can catch a single base class.
"""


class ValidationError(ValueError):
    """A distribution table or parameter set violates a structural invariant."""


class MissingKeyError(ValidationError):
    """The key set of a distribution table is not exactly {0,1}^n."""


class NegativeEntryError(ValidationError):
    """A table entry is below the negative tolerance floor."""


class EntryOutOfRangeError(ValidationError):
    """A table entry exceeds 1 beyond tolerance."""


class SumNotOneError(ValidationError):
    """The table entries do not sum to 1 within tolerance."""


class InvalidParamsError(ValidationError):
    """Transition/emission/initial data is not row-stochastic within tolerance."""


class LengthError(ValueError):
    """A string length or block shape request is out of range."""


class AlphabetError(ValueError):
    """A string contains characters outside {0, 1}."""


class CapExceededError(ValueError):
    """A full-table expansion was requested beyond the configured cap."""


class DuplicateEigenvalueError(ValueError):
    """Requested diagonal values are too close to be pairwise distinct."""


class InvalidPermutationError(ValueError):
    """A state relabeling is not a permutation of range(d)."""


class DimensionMismatchError(ValueError):
    """Two parameter sets with different state counts were compared."""


class StateCountTooLargeError(ValueError):
    """An exhaustive permutation search was requested for too many states."""


class RankDeficientError(ValueError):
    """No sufficiently well-conditioned square submatrix exists."""


class DegenerateNormalizationError(ValueError):
    """The right fixed vector is numerically zero; no unit-sum rescaling exists."""


class TooManyMinorsError(ValueError):
    """A minor scan would exceed the enumeration budget."""


class WrongVerdictError(ValueError):
    """An operation that needs a positive verdict was given a different one."""
