"""Error types and error codes."""

from gmr_hilbert.errors.codes import ErrorCode
from gmr_hilbert.errors.exceptions import (
    CapExceededError,
    DivisibilityError,
    GmrError,
    InvalidParamsError,
    NoAdmissibleParamsError,
    NoFiniteRegDegreeError,
    VerificationMismatchError,
)

__all__ = [
    "ErrorCode",
    "GmrError",
    "InvalidParamsError",
    "DivisibilityError",
    "CapExceededError",
    "NoFiniteRegDegreeError",
    "NoAdmissibleParamsError",
    "VerificationMismatchError",
]
