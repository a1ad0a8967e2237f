"""Record rendering and output files.

Every command produces a list of flat-or-nested record dicts. JSON keeps the
nesting; CSV and table output flatten nested keys to ``a.b`` and encode lists
as JSON text, so all three formats carry the same numbers.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import sys
from collections.abc import Iterable, Mapping
from contextlib import suppress
from pathlib import Path
from typing import Any

from tabulate import tabulate

from gmr_cli.run_config import OutputFormat

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

Record = dict[str, Any]


def make_record(kind: str, payload: Mapping[str, Any]) -> Record:
    """Tag ``payload`` with the schema version and the record kind."""
    return {"schema": SCHEMA_VERSION, "record": kind, **payload}


def flatten(record: Mapping[str, Any], prefix: str = "") -> Record:
    flat: Record = {}
    for key, value in record.items():
        name = f"{prefix}{key}"
        if isinstance(value, Mapping):
            flat.update(flatten(value, f"{name}."))
        elif isinstance(value, list | tuple):
            flat[name] = json.dumps(list(value))
        else:
            flat[name] = value
    return flat


def _fieldnames(rows: Iterable[Record]) -> list[str]:
    names: dict[str, None] = {}
    for row in rows:
        names.update(dict.fromkeys(row))
    return list(names)


def render(records: list[Record], fmt: OutputFormat) -> str:
    """Render records as JSON, CSV or a plain-text table."""
    if fmt is OutputFormat.JSON:
        return json.dumps(records, indent=2) + "\n"

    rows = [flatten(record) for record in records]
    fieldnames = _fieldnames(rows)
    if fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.DictWriter(
            buffer, fieldnames=fieldnames, extrasaction="ignore", lineterminator="\n"
        )
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue()

    table = [[row.get(name, "") for name in fieldnames] for row in rows]
    return tabulate(table, headers=fieldnames, tablefmt="simple") + "\n"


def write_output(text: str, out: Path | None) -> None:
    """Write ``text`` to ``out`` atomically, or to stdout when ``out`` is None.

    Raises:
        OSError: If the file cannot be written, with the path in the message

    """
    if out is None:
        sys.stdout.write(text)
        return

    tmp = out.with_name(f".{out.name}.tmp")
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        tmp.write_text(text, encoding="utf-8")
        os.replace(tmp, out)
    except OSError as e:
        with suppress(OSError):
            tmp.unlink(missing_ok=True)
        raise OSError(f"Cannot write output to '{out}': {e}") from e
    logger.info(f"Wrote output to '{out}'")
