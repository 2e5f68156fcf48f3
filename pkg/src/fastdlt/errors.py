"""Exception hierarchy shared by all fastdlt modules."""


class DLTError(Exception):
    """Base class for every error raised by fastdlt."""


class InvalidSizeError(DLTError, ValueError):
    """A transform or grid size is not a positive integer."""


class DimensionError(DLTError, ValueError):
    """Vector length does not match the plan or grid size."""


class BasisError(DLTError, ValueError):
    """Coefficient vector is tagged with the wrong polynomial basis."""


class DomainError(DLTError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class InvalidInputError(DLTError, ValueError):
    """Input contains NaN or infinite entries."""


class ToleranceError(DLTError, ValueError):
    """No admissible truncation length reaches the requested tolerance."""


class ConvergenceError(DLTError, RuntimeError):
    """Newton iteration for the Legendre nodes did not converge."""


class InsufficientSamplingError(DLTError, ValueError):
    """Too few sample points to recover the requested coefficients."""


class OverflowGuardError(DLTError, OverflowError):
    """Scaled Taylor coefficients ``n**l * c_n`` would overflow binary64."""


class VectorFileError(DLTError):
    """A vector file is malformed or cannot be decoded."""
