"""Custom exceptions for the Generalized MinRank toolkit."""

from gmr_hilbert.errors.codes import ErrorCode


class GmrError(Exception):
    """Base exception for gmr_hilbert errors."""

    def __init__(self, message: str, error_code: ErrorCode):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class InvalidParamsError(GmrError):
    """Parameters outside the domain of an operation."""

    def __init__(self, message: str):
        super().__init__(message, ErrorCode.INVALID_PARAMS)


class DivisibilityError(GmrError):
    """A series expected to be divisible by t^e is not.

    Exact divisibility is guaranteed by the determinant identities, so this
    always points at a bug in how a determinant was assembled.
    """

    def __init__(self, exponent: int, index: int, coefficient: int):
        super().__init__(
            f"Series not divisible by t^{exponent}: "
            f"coefficient of t^{index} is {coefficient}",
            ErrorCode.NOT_DIVISIBLE,
        )
        self.exponent = exponent
        self.index = index
        self.coefficient = coefficient


class CapExceededError(GmrError):
    """A configured size cap would be exceeded."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(
            f"{what} needs {size} entries, above the cap of {cap}",
            ErrorCode.CAP_EXCEEDED,
        )
        self.what = what
        self.size = size
        self.cap = cap


class NoFiniteRegDegreeError(GmrError):
    """The truncated series has no non-positive coefficient within the order."""

    def __init__(self, order: int):
        super().__init__(
            f"Series did not terminate within order {order}",
            ErrorCode.NO_FINITE_REG_DEGREE,
        )
        self.order = order


class NoAdmissibleParamsError(GmrError):
    """No (a, dc) pair of the hybrid search produced a finite regularity degree."""

    def __init__(self, message: str = "No admissible (a, dc) pair"):
        super().__init__(message, ErrorCode.NO_ADMISSIBLE_PARAMS)


class VerificationMismatchError(GmrError):
    """Observed Hilbert function differs from the prediction."""

    def __init__(self, mismatches: int):
        super().__init__(
            f"{mismatches} Hilbert function value(s) differ from the prediction",
            ErrorCode.VERIFICATION_MISMATCH,
        )
        self.mismatches = mismatches
