"""Validation utilities."""

from pydantic import ValidationError
from sympy import isprime

from gmr_hilbert.errors import InvalidParamsError
from gmr_hilbert.models import GmrParams


def validate_prime(q: int) -> int:
    """Return ``q`` if it is a prime field size."""
    if not isprime(q):
        raise InvalidParamsError(f"Field size q={q} is not prime")
    return q


def build_params(m: int, n: int, K: int, r: int, D: int = 1) -> GmrParams:
    """Build GmrParams, reporting validation failures as InvalidParamsError."""
    try:
        return GmrParams(m=m, n=n, K=K, r=r, D=D)
    except ValidationError as e:
        raise InvalidParamsError(f"Invalid parameters: {e.errors()[0]['msg']}") from e


def validate_rank(m: int, n: int, r: int) -> None:
    """Check 0 <= r <= min(m, n) for the bare-dimension engines."""
    if m < 1 or n < 1:
        raise InvalidParamsError(f"Need m, n >= 1, got m={m}, n={n}")
    if not 0 <= r <= min(m, n):
        raise InvalidParamsError(f"Need 0 <= r <= min(m, n), got r={r}")
