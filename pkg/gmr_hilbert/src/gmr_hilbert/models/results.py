from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from gmr_hilbert.models.params import GmrParams, Strategy, Validity


class HilbertResult(BaseModel):
    """Truncated Hilbert series of a Support-Minors (or Minors) system."""

    model_config = ConfigDict(frozen=True)

    params: GmrParams
    dc: int = Field(..., ge=0, description="Degree in the Plücker variables")
    series: list[int] = Field(..., description="Coefficients after [.]_+ truncation")
    raw_series: list[int] = Field(..., description="Coefficients before truncation")
    numerator: list[int] = Field(
        ..., description="Numerator N(t) of the rational form N(t)/(1-t)^K"
    )
    terminated: bool = Field(
        ..., description="Whether a non-positive coefficient was met within order"
    )
    reg_degree: int | None = Field(
        default=None, description="Degree of regularity (truncated degree plus one)"
    )
    validity: Validity

    @model_validator(mode="after")
    def validate_reg_degree(self) -> HilbertResult:
        """Validate that reg_degree is present exactly when terminated."""
        if self.terminated != (self.reg_degree is not None):
            raise ValueError("reg_degree must be set iff the series terminated")
        if self.reg_degree is not None and self.reg_degree != len(self.series):
            raise ValueError(
                f"reg_degree {self.reg_degree} does not follow the truncated series"
            )
        return self

    @property
    def order(self) -> int:
        return len(self.raw_series)


class CostModel(BaseModel):
    """Constants of the linear-algebra cost formula."""

    model_config = ConfigDict(frozen=True)

    omega: float = Field(default=2.81, ge=2.0, le=3.0)
    c_omega: float = Field(default=3.0, gt=0)
    c_wiedemann: float = Field(default=3.0, gt=0)
    fieldop_bits: float | None = Field(
        default=None,
        ge=0,
        description="log2 cost of one field operation; None lets the caller derive it",
    )


class CostPoint(BaseModel):
    """Cost of one modeling at one (dc, dx_reg) point."""

    model_config = ConfigDict(frozen=True)

    log2_cost: float
    dreg: int
    strategy: Strategy
    macaulay_log2_cols: float
    density: int


class HybridCandidate(BaseModel):
    """One (a, dc) cell of the hybrid search."""

    a: int
    dc: int
    log2_cost: float | None = None
    dreg: int | None = None
    strategy: Strategy | None = None
    validity: Validity
    skipped: str | None = Field(default=None, description="Why the cell was skipped")


class ComplexityReport(BaseModel):
    """Best hybrid Support-Minors cost over the searched (a, dc) grid."""

    params: GmrParams
    q: int
    log2_cost: float = Field(..., description="log2 of the bit cost, 1 decimal place")
    dc_star: int
    dreg: int
    a_star: int
    strategy: Strategy
    sub_params: GmrParams
    validity: Validity
    fieldop_bits: float
    breakdown: list[HybridCandidate] = Field(default_factory=list)


class SweepRow(BaseModel):
    """One r value of the r-sweep, Minors versus Support-Minors at dc=1."""

    r: int
    K: int
    q: int | None = Field(default=None, description="Field size, recorded only")
    minors_cost: float | None = None
    sm_cost: float | None = None
    minors_dreg: int | None = None
    sm_dreg: int | None = None
    skipped: str | None = None


class Dimensions(BaseModel):
    """Dimension data of the Support-Minors ideal S in K[U, C_I]."""

    model_config = ConfigDict(frozen=True)

    krull_s: int = Field(..., description="Krull dimension of K[U, C_I]/S")
    height_s: int = Field(..., description="Height of S")
    plucker_dim: int = Field(
        ..., description="Krull dimension of the Grassmannian coordinate ring"
    )
