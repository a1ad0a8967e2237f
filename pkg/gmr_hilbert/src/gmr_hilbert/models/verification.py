from __future__ import annotations

from pydantic import BaseModel, Field

from gmr_hilbert.models.params import GmrParams


class MacaulayRank(BaseModel):
    """Rank data of one Support-Minors Macaulay matrix."""

    dx: int
    dc: int
    rows: int
    cols: int
    rank: int
    ambient_dim: int
    observed_hf: int


class DegreeCheck(BaseModel):
    """Observed versus predicted Hilbert function at one x-degree."""

    params: GmrParams
    q: int
    seed: int
    dc: int
    dx: int
    ambient_dim: int
    rank: int
    observed_hf: int
    predicted: int
    raw_predicted: int = Field(..., description="Coefficient before [.]_+ truncation")
    post_truncation: bool = Field(
        ..., description="dx lies at or beyond the truncation point"
    )
    match: bool
    elapsed_ms: int


class SeriesVerification(BaseModel):
    """All degree checks of one instance, split at the truncation point."""

    params: GmrParams
    q: int
    seed: int
    dc: int
    checks: list[DegreeCheck]

    @property
    def pre_truncation(self) -> list[DegreeCheck]:
        return [c for c in self.checks if not c.post_truncation]

    @property
    def post_truncation(self) -> list[DegreeCheck]:
        return [c for c in self.checks if c.post_truncation]

    @property
    def all_match(self) -> bool:
        return all(c.match for c in self.checks)

    @property
    def failures(self) -> list[DegreeCheck]:
        """Checks that contradict the prediction.

        Before the truncation point any difference counts. At or past it an
        instance may keep a one-dimensional remainder from a solution, so only
        values above 1 count.
        """
        return [
            c
            for c in self.checks
            if (c.observed_hf > 1 if c.post_truncation else not c.match)
        ]


class TrialRecord(BaseModel):
    """Outcome of one random instance in a genericity experiment."""

    trial: int
    seed: int
    matches: dict[int, bool] = Field(..., description="dc -> observed == predicted")
    observed: dict[int, int]
    predicted: dict[int, int]

    @property
    def generic(self) -> bool:
        return all(self.matches.values())


class TrialsReport(BaseModel):
    """Match fractions of a genericity experiment."""

    params: GmrParams
    q: int
    dx: int
    dc_set: list[int]
    seed: int
    trials: int
    match_fraction: float
    per_dc_fraction: dict[int, float]
    records: list[TrialRecord]
