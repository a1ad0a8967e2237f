"""Unit tests for RunConfig validation and serialization."""

from __future__ import annotations

from pathlib import Path

import pytest
from pydantic import ValidationError

from gmr_cli.run_config import Command, OutputFormat, RunConfig
from gmr_hilbert.models import CostModel, GmrParams

PARAMS = GmrParams(m=5, n=5, K=25, r=2)


# =============================================================================
# Test: Defaults and Serialization
# =============================================================================


def test_defaults():
    """Test the documented defaults of an identities run."""
    cfg = RunConfig(command=Command.IDENTITIES)
    assert cfg.params is None
    assert cfg.dx_max == 3
    assert cfg.dx == 1
    assert cfg.seed == 0
    assert cfg.trials == 20
    assert cfg.model == CostModel()
    assert cfg.output_format is OutputFormat.TABLE
    assert cfg.out is None
    assert not cfg.strict and not cfg.verbose


def test_round_trip_through_json(tmp_path: Path):
    """Test that a fully populated config survives JSON serialization."""
    cfg = RunConfig(
        command=Command.VERIFY,
        params=PARAMS,
        dc_max=3,
        dx_max=2,
        q=31,
        order=16,
        seed=11,
        workers=2,
        model=CostModel(omega=2.5, fieldop_bits=4.0),
        output_format=OutputFormat.CSV,
        out=tmp_path / "checks.csv",
        strict=True,
    )
    assert RunConfig.model_validate_json(cfg.model_dump_json()) == cfg


def test_sweep_config_round_trip():
    cfg = RunConfig(command=Command.SWEEP_R, sweep_dims=(22, 22), q=16)
    restored = RunConfig.model_validate_json(cfg.model_dump_json())
    assert restored == cfg
    assert restored.sweep_dims == (22, 22)


# =============================================================================
# Test: Per-Command Requirements
# =============================================================================


@pytest.mark.parametrize(
    "command", [Command.HILBERT, Command.ESTIMATE, Command.VERIFY, Command.TRIALS]
)
def test_commands_need_params(command: Command):
    """Test that instance commands reject a missing family."""
    with pytest.raises(ValidationError, match="needs --m"):
        RunConfig(command=command, q=31)


def test_sweep_needs_dimensions():
    with pytest.raises(ValidationError, match="needs --m and --n"):
        RunConfig(command=Command.SWEEP_R)


@pytest.mark.parametrize("command", [Command.ESTIMATE, Command.VERIFY, Command.TRIALS])
def test_commands_need_field_size(command: Command):
    with pytest.raises(ValidationError, match="needs --q"):
        RunConfig(command=command, params=PARAMS)


def test_hilbert_needs_no_field_size():
    assert RunConfig(command=Command.HILBERT, params=PARAMS).q is None


def test_estimate_accepts_prime_power():
    """Test that the estimator takes any field size, e.g. q = 16."""
    assert RunConfig(command=Command.ESTIMATE, params=PARAMS, q=16).q == 16


@pytest.mark.parametrize("command", [Command.VERIFY, Command.TRIALS])
def test_verification_needs_prime_field(command: Command):
    """Test that finite-field runs reject a non-prime q."""
    with pytest.raises(ValidationError, match="not prime"):
        RunConfig(command=command, params=PARAMS, q=16)


def test_verification_rejects_dc_zero():
    with pytest.raises(ValidationError, match="dc >= 1"):
        RunConfig(command=Command.VERIFY, params=PARAMS, q=31, dc=0)


def test_dc_and_dc_max_are_exclusive():
    with pytest.raises(ValidationError, match="mutually exclusive"):
        RunConfig(command=Command.HILBERT, params=PARAMS, dc=1, dc_max=3)


@pytest.mark.parametrize(
    ("field", "value"),
    [("dx_max", 0), ("trials", 0), ("seed", -1), ("q", 1), ("order", 0)],
)
def test_field_bounds(field: str, value: int):
    with pytest.raises(ValidationError):
        RunConfig(command=Command.IDENTITIES, **{field: value})


def test_config_is_frozen():
    cfg = RunConfig(command=Command.IDENTITIES)
    with pytest.raises(ValidationError):
        cfg.seed = 3


# =============================================================================
# Test: dc_values
# =============================================================================


def test_dc_values():
    """Test the precedence dc, then dc_max, then the command default."""
    base = {"command": Command.HILBERT, "params": PARAMS}
    assert RunConfig(**base, dc=0).dc_values() == [0]
    assert RunConfig(**base, dc_max=3).dc_values() == [1, 2, 3]
    assert RunConfig(**base).dc_values() == [1]
    assert RunConfig(**base).dc_values(default_max=3) == [1, 2, 3]
