"""Step definitions for Mirath estimates and the target-rank sweep."""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Any

from pytest_bdd import given, parsers, then, when

from gmr_cli.__main__ import EXIT_OK, main
from gmr_cli.presets import get_preset
from gmr_hilbert.estimator import complexity_hybrid


def _ints(text: str) -> list[int]:
    return [int(value) for value in text.split(",")]


@given(parsers.parse('the "{name}" parameter set'))
def load_parameter_set(workflow_context: dict[str, Any], name: str):
    """Take the family and field size from the packaged presets."""
    preset = get_preset(name)
    workflow_context["preset"] = preset
    workflow_context["params"] = preset.params()


@when("the hybrid estimate is computed")
def compute_estimate(workflow_context: dict[str, Any]):
    preset = workflow_context["preset"]
    workflow_context["report"] = complexity_hybrid(preset.params(), preset.q)


@when(
    parsers.parse(
        "the hybrid estimate is computed with dc {dc:d} "
        "and degree of regularity at most r + 1"
    )
)
def compute_restricted_estimate(workflow_context: dict[str, Any], dc: int):
    preset = workflow_context["preset"]
    workflow_context["report"] = complexity_hybrid(
        preset.params(), preset.q, dc_range=[dc], max_dreg=preset.r + 1
    )


@then(parsers.parse("the cost is {bits:d} bits within {tolerance:d} bits"))
def cost_within(workflow_context: dict[str, Any], bits: int, tolerance: int):
    report = workflow_context["report"]
    assert abs(report.log2_cost - bits) <= tolerance, report.log2_cost


@then(
    parsers.parse(
        "the best attack guesses {a:d} columns with degree of regularity {dreg:d}"
    )
)
def best_attack(workflow_context: dict[str, Any], a: int, dreg: int):
    report = workflow_context["report"]
    assert (report.a_star, report.dreg) == (a, dreg)


@when(
    parsers.parse(
        "the r-sweep for m = {m:d} and n = {n:d} over GF({q:d}) runs "
        "through the command line"
    )
)
def run_sweep(workflow_context: dict[str, Any], tmp_path: Path, m: int, n: int, q: int):
    """Write the sweep as CSV and read it back."""
    out = tmp_path / "sweep.csv"
    argv = ["sweep-r", "--m", str(m), "--n", str(n), "--q", str(q)]
    assert main([*argv, "--format", "csv", "--out", str(out)]) == EXIT_OK
    with open(out, newline="") as f:
        workflow_context["rows"] = {int(row["r"]): row for row in csv.DictReader(f)}


@then(parsers.parse("there is one row for each r from {first:d} to {last:d}"))
def one_row_per_rank(workflow_context: dict[str, Any], first: int, last: int):
    assert sorted(workflow_context["rows"]) == list(range(first, last + 1))


@then(parsers.parse("the Support-Minors degrees of regularity are {values}"))
def sm_dregs(workflow_context: dict[str, Any], values: str):
    rows = workflow_context["rows"]
    assert [int(rows[r]["sm_dreg"]) for r in sorted(rows)] == _ints(values)


@then(parsers.parse("the Minors degrees of regularity are {values}"))
def minors_dregs(workflow_context: dict[str, Any], values: str):
    rows = workflow_context["rows"]
    assert [int(rows[r]["minors_dreg"]) for r in sorted(rows)] == _ints(values)


@then(
    parsers.parse(
        "at r = {r:d} the {column} cost is {bits:f} bits within {tolerance:d} bits"
    )
)
def sweep_cost(
    workflow_context: dict[str, Any], r: int, column: str, bits: float, tolerance: int
):
    field = {"Support-Minors": "sm_cost", "Minors": "minors_cost"}[column]
    cost = float(workflow_context["rows"][r][field])
    assert abs(cost - bits) <= tolerance, cost
