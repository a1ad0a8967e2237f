from enum import Enum


class ErrorCode(str, Enum):
    """Standard error codes."""

    # Common Errors
    INTERNAL_ERROR = "INTERNAL_ERROR"
    INVALID_PARAMS = "INVALID_PARAMS"

    # Series Errors
    NOT_DIVISIBLE = "NOT_DIVISIBLE"
    NO_FINITE_REG_DEGREE = "NO_FINITE_REG_DEGREE"

    # Estimator Errors
    NO_ADMISSIBLE_PARAMS = "NO_ADMISSIBLE_PARAMS"

    # Resource Errors
    CAP_EXCEEDED = "CAP_EXCEEDED"

    # Verification Errors
    VERIFICATION_MISMATCH = "VERIFICATION_MISMATCH"
