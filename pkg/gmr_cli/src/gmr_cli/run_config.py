"""Validated configuration of one command-line run."""

from __future__ import annotations

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from gmr_hilbert.errors import InvalidParamsError
from gmr_hilbert.models import CostModel, GmrParams
from gmr_hilbert.utils import validate_prime


class Command(str, Enum):
    HILBERT = "hilbert"
    ESTIMATE = "estimate"
    SWEEP_R = "sweep-r"
    VERIFY = "verify"
    TRIALS = "trials"
    IDENTITIES = "identities"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TABLE = "table"


NEEDS_PARAMS = {
    Command.HILBERT,
    Command.ESTIMATE,
    Command.VERIFY,
    Command.TRIALS,
}
NEEDS_FIELD = {Command.ESTIMATE, Command.VERIFY, Command.TRIALS}
NEEDS_PRIME = {Command.VERIFY, Command.TRIALS}


class RunConfig(BaseModel):
    """Everything a command needs; serializes to JSON and back unchanged."""

    model_config = ConfigDict(frozen=True)

    command: Command
    params: GmrParams | None = Field(default=None, description="Instance family")
    sweep_dims: tuple[int, int] | None = Field(
        default=None, description="(m, n) of the r-sweep family"
    )
    dc: int | None = Field(default=None, ge=0, description="Single Plücker degree")
    dc_max: int | None = Field(
        default=None, ge=1, description="Use Plücker degrees 1..dc_max"
    )
    dx_max: int = Field(default=3, ge=1, description="Highest x-degree to verify")
    dx: int = Field(default=1, ge=1, description="x-degree of genericity trials")
    q: int | None = Field(default=None, ge=2, description="Field size")
    order: int | None = Field(
        default=None, ge=1, description="Starting truncation order of the series"
    )
    seed: int = Field(default=0, ge=0)
    trials: int = Field(default=20, ge=1)
    workers: int | None = Field(default=None, ge=1)
    a_fixed: int | None = Field(default=None, ge=0)
    max_dreg: int | None = Field(default=None, ge=1)
    model: CostModel = Field(default_factory=CostModel)
    output_format: OutputFormat = OutputFormat.TABLE
    out: Path | None = Field(default=None, description="Output file, stdout if unset")
    strict: bool = Field(default=False, description="Exit 3 on verification mismatch")
    verbose: bool = Field(default=False, description="Emit per-candidate records")

    @model_validator(mode="after")
    def validate_command_inputs(self) -> RunConfig:
        """Check the inputs each command requires."""
        if self.command in NEEDS_PARAMS and self.params is None:
            raise ValueError(f"'{self.command.value}' needs --m, --n, --K and --r")
        if self.command is Command.SWEEP_R and self.sweep_dims is None:
            raise ValueError("'sweep-r' needs --m and --n")
        if self.command in NEEDS_FIELD and self.q is None:
            raise ValueError(f"'{self.command.value}' needs --q")
        if self.command in NEEDS_PRIME and self.q is not None:
            try:
                validate_prime(self.q)
            except InvalidParamsError as e:
                raise ValueError(e.message) from e
        if self.dc is not None and self.dc_max is not None:
            raise ValueError("--dc and --dc-max are mutually exclusive")
        if self.command in NEEDS_PRIME and self.dc == 0:
            raise ValueError("Verification needs dc >= 1")
        return self

    def dc_values(self, default_max: int = 1) -> list[int]:
        """Plücker degrees to run: ``dc``, else 1..dc_max, else 1..default_max."""
        if self.dc is not None:
            return [self.dc]
        return list(range(1, (self.dc_max or default_max) + 1))
