from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class GmrParams(BaseModel):
    """One Generalized MinRank instance family.

    ``F`` is an ``m x n`` matrix whose entries are homogeneous polynomials of
    degree ``D`` in ``K`` variables; the target rank is ``r``.
    """

    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Row count of F")
    n: int = Field(..., ge=1, description="Column count of F")
    K: int = Field(..., ge=1, description="Number of linear variables x")
    r: int = Field(..., ge=0, description="Target rank")
    D: int = Field(default=1, ge=1, description="Degree of the entries of F")

    @model_validator(mode="after")
    def validate_rank(self) -> GmrParams:
        """Validate 0 <= r <= min(m, n)."""
        if self.r > min(self.m, self.n):
            raise ValueError(
                f"Target rank r={self.r} exceeds min(m, n)={min(self.m, self.n)}"
            )
        return self

    def hybrid(self, a: int) -> GmrParams:
        """Parameters left after guessing ``a`` columns of the support."""
        return GmrParams(
            m=self.m, n=self.n - a, K=self.K - a * self.m, r=self.r, D=self.D
        )

    def label(self) -> str:
        return f"(m={self.m}, n={self.n}, K={self.K}, r={self.r}, D={self.D})"


class Validity(str, Enum):
    """How far the closed-form series is backed for a parameter region."""

    PROVEN = "proven"
    CONJECTURED_OVERDETERMINED = "conjectured_overdetermined"
    CONJECTURED_DC_SMALL = "conjectured_dc_small"
    UNRELIABLE = "unreliable"


class Strategy(str, Enum):
    """Linear-algebra back end that attains a cost."""

    DENSE = "dense"
    WIEDEMANN = "wiedemann"
