"""Exception hierarchy.

The CLI maps these onto exit codes, so each failure family gets one class.
"""


class TreeCodeError(Exception):
    """Base class for all package errors."""


class ParameterError(TreeCodeError, ValueError):
    """Generator or bound called outside its parameter range."""


class DimensionError(ParameterError):
    """Objects on different vertex counts were combined."""


class StructureError(TreeCodeError, ValueError):
    """Edge data does not form the required structure (tree, forest, ...)."""

    def __init__(self, message: str, index: int | None = None):
        if index is not None:
            message = f"codeword {index}: {message}"
        super().__init__(message)
        self.index = index


class ResourceError(TreeCodeError):
    """Exhaustive computation refused because it exceeds a configured cap."""


class DataIntegrityError(TreeCodeError):
    """Embedded table failed its checksum or structural validation."""


class FieldError(TreeCodeError, ValueError):
    """Finite-field misuse: zero inverse, mixed fields, bad modulus."""


class UndefinedDistanceError(TreeCodeError, ValueError):
    """Minimum distance requested for a code with fewer than two codewords."""


class DecodingError(TreeCodeError):
    """Received word is not a fragment of any codeword."""


class AmbiguityError(DecodingError):
    def __init__(self, message: str, candidates):
        super().__init__(message)
        self.candidates = list(candidates)


class BoundInconsistencyError(TreeCodeError):
    """A lower bound exceeded an upper bound; carries both records."""

    def __init__(self, message: str, lower, upper):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class FormatError(TreeCodeError, ValueError):
    """A document on disk is malformed or has the wrong format tag."""
