"""Step definitions for runs of the gmr command."""

from __future__ import annotations

import json
import shlex
from typing import Any

import pytest
from pytest_bdd import parsers, then, when

from gmr_cli.__main__ import main


@when(parsers.parse('I run "{command}"'))
def run_gmr(
    workflow_context: dict[str, Any],
    capsys: pytest.CaptureFixture[str],
    command: str,
):
    """Run the command in-process, keeping its exit status and stdout."""
    program, *argv = shlex.split(command)
    assert program == "gmr"
    capsys.readouterr()
    try:
        code = main(argv)
    except SystemExit as e:
        code = int(e.code or 0)
    workflow_context["exit_code"] = code
    workflow_context["stdout"] = capsys.readouterr().out


@then(parsers.parse("the command exits with status {code:d}"))
def exit_status(workflow_context: dict[str, Any], code: int):
    assert workflow_context["exit_code"] == code


def _records(workflow_context: dict[str, Any]) -> list[dict[str, Any]]:
    records = json.loads(workflow_context["stdout"])
    assert records, "no records"
    return records


@then(parsers.parse('the first record has "{key}" equal to {value}'))
def first_record_field(workflow_context: dict[str, Any], key: str, value: str):
    assert _records(workflow_context)[0][key] == json.loads(value)


@then(parsers.parse('every record has "{key}" equal to {value}'))
def every_record_field(workflow_context: dict[str, Any], key: str, value: str):
    expected = json.loads(value)
    assert all(record[key] == expected for record in _records(workflow_context))


@then(parsers.parse("every record carries schema version {version:d}"))
def schema_version(workflow_context: dict[str, Any], version: int):
    assert all(record["schema"] == version for record in _records(workflow_context))
