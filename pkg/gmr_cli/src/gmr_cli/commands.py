"""Command implementations: each turns a RunConfig into output records."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

from gmr_cli.output import Record, make_record
from gmr_cli.run_config import Command, RunConfig
from gmr_hilbert.combinatorics import combi_identity_failures, saalschutz_failures
from gmr_hilbert.errors import NoFiniteRegDegreeError
from gmr_hilbert.estimator import complexity_hybrid, sweep_r
from gmr_hilbert.ff import genericity_trials, verify_series
from gmr_hilbert.hilbert import hs_sm_generic, hs_sm_terminated, rational_form
from gmr_hilbert.models import GmrParams

logger = logging.getLogger(__name__)

# Default Plücker degree ranges when neither --dc nor --dc-max is given
VERIFY_DC_MAX = 1
TRIALS_DC_MAX = 3

SAALSCHUTZ_GRID = (range(-6, 7), range(-6, 7), range(-3, 7), range(7))
COMBI_GRID = (range(1, 9), range(-8, 9), range(1, 9))

IdentitySweep = Callable[..., list[tuple[int, ...]]]


@dataclass
class CommandResult:
    """Records to print, plus the number of failed checks they contain."""

    records: list[Record]
    mismatches: int = 0


def _params(cfg: RunConfig) -> GmrParams:
    assert cfg.params is not None
    return cfg.params


def _q(cfg: RunConfig) -> int:
    assert cfg.q is not None
    return cfg.q


def cmd_hilbert(cfg: RunConfig) -> CommandResult:
    """Series, rational form, regularity degree and validity per dc.

    A series that does not terminate below the order cap is reported at
    ``cfg.order`` without a rational form.
    """
    p = _params(cfg)
    records = []
    for dc in cfg.dc_values():
        try:
            result = hs_sm_terminated(p, dc, cfg.order)
        except NoFiniteRegDegreeError as e:
            logger.warning(f"dc={dc}: {e.message}; reporting the truncated series")
            result = hs_sm_generic(p, dc, cfg.order)

        payload: dict[str, Any] = {
            "params": p.model_dump(),
            "dc": dc,
            "terminated": result.terminated,
            "reg_degree": result.reg_degree,
            "validity": result.validity.value,
            "series": result.series,
            "rational_numerator": None,
            "rational_exponent": None,
        }
        if result.terminated:
            numerator, exponent = rational_form(result)
            payload["rational_numerator"] = numerator
            payload["rational_exponent"] = exponent
        records.append(make_record("hilbert", payload))
    return CommandResult(records)


def cmd_estimate(cfg: RunConfig) -> CommandResult:
    """Hybrid Support-Minors estimate; ``verbose`` adds one record per cell."""
    p, q = _params(cfg), _q(cfg)
    dc_range = cfg.dc_values() if cfg.dc is not None or cfg.dc_max else None
    report = complexity_hybrid(
        p,
        q,
        dc_range=dc_range,
        model=cfg.model,
        max_dreg=cfg.max_dreg,
        a_fixed=cfg.a_fixed,
        verbose=cfg.verbose,
        order=cfg.order,
    )
    records = [
        make_record("estimate", report.model_dump(mode="json", exclude={"breakdown"}))
    ]
    records.extend(
        make_record("candidate", candidate.model_dump(mode="json"))
        for candidate in report.breakdown
    )
    return CommandResult(records)


def cmd_sweep_r(cfg: RunConfig) -> CommandResult:
    """One record per target rank: Minors and Support-Minors costs and dreg."""
    assert cfg.sweep_dims is not None
    m, n = cfg.sweep_dims
    rows = sweep_r(m, n, q=cfg.q, model=cfg.model)
    records = [
        make_record("sweep", {"m": m, "n": n, **row.model_dump(mode="json")})
        for row in rows
    ]
    return CommandResult(records)


def cmd_verify(cfg: RunConfig) -> CommandResult:
    """Macaulay-rank check of the predicted series for each dc, one record per dx."""
    p, q = _params(cfg), _q(cfg)
    records = []
    mismatches = 0
    for dc in cfg.dc_values(VERIFY_DC_MAX):
        verification = verify_series(p, q, dc, cfg.dx_max, cfg.seed)
        mismatches += len(verification.failures)
        records.extend(
            make_record("check", check.model_dump(mode="json"))
            for check in verification.checks
        )
    if mismatches:
        logger.warning(f"{mismatches} check(s) for {p.label()} differ")
    return CommandResult(records, mismatches=mismatches)


def cmd_trials(cfg: RunConfig) -> CommandResult:
    """Genericity statistics; ``verbose`` adds one record per trial."""
    p, q = _params(cfg), _q(cfg)
    report = genericity_trials(
        p,
        q,
        cfg.dc_values(TRIALS_DC_MAX),
        cfg.dx,
        cfg.trials,
        cfg.seed,
        workers=cfg.workers,
    )
    summary = report.model_dump(mode="json", exclude={"records"})
    records = [make_record("trials", summary)]
    if cfg.verbose:
        records.extend(
            make_record("trial", record.model_dump(mode="json"))
            for record in report.records
        )
    return CommandResult(records)


def cmd_identities(cfg: RunConfig) -> CommandResult:
    """Exhaustive small-integer sweeps of the two binomial identities."""
    sweeps: dict[str, tuple[IdentitySweep, tuple[range, ...]]] = {
        "saalschutz": (saalschutz_failures, SAALSCHUTZ_GRID),
        "combi": (combi_identity_failures, COMBI_GRID),
    }
    records = []
    mismatches = 0
    for name, (sweep, grid) in sweeps.items():
        failures = sweep(*grid)
        points = math.prod(len(axis) for axis in grid)
        mismatches += len(failures)
        if failures:
            logger.error(f"Identity '{name}' fails at {failures[:5]}")
        records.append(
            make_record(
                "identity",
                {
                    "identity": name,
                    "points": points,
                    "failures": len(failures),
                    "failing_points": [list(point) for point in failures],
                },
            )
        )
    return CommandResult(records, mismatches=mismatches)


COMMANDS: dict[Command, Callable[[RunConfig], CommandResult]] = {
    Command.HILBERT: cmd_hilbert,
    Command.ESTIMATE: cmd_estimate,
    Command.SWEEP_R: cmd_sweep_r,
    Command.VERIFY: cmd_verify,
    Command.TRIALS: cmd_trials,
    Command.IDENTITIES: cmd_identities,
}


def run_command(cfg: RunConfig) -> CommandResult:
    logger.debug(f"Running '{cfg.command.value}' with {cfg.model_dump_json()}")
    return COMMANDS[cfg.command](cfg)
