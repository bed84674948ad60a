"""Serialization of check rows to JSON and CSV.

CSV columns are fixed: check_id, claim, parameter_json, observed, expected,
tolerance, pass.  The CSV body is a pure function of the rows, so identical
configurations produce byte-identical files.  The JSON document additionally
carries a generated_at timestamp, which callers comparing reports for
determinism should ignore.
"""

from __future__ import annotations

import csv
import dataclasses
import json
from datetime import datetime, timezone

from .checks import CheckRow

__all__ = ["CSV_COLUMNS", "rows_to_payload", "write_json", "write_csv"]

CSV_COLUMNS = ("check_id", "claim", "parameter_json", "observed", "expected", "tolerance", "pass")


def rows_to_payload(command: str, config: dict, rows: list[CheckRow]) -> dict:
    return {
        "command": command,
        "config": config,
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "all_passed": all(r.passed for r in rows),
        "checks": [dataclasses.asdict(r) for r in rows],
    }


def write_json(path, command: str, config: dict, rows: list[CheckRow]) -> None:
    payload = rows_to_payload(command, config, rows)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_csv(path, rows: list[CheckRow]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow(
                [r.check_id, r.claim, r.parameter_json, repr(r.observed), repr(r.expected), repr(r.tolerance),
                 "true" if r.passed else "false"]
            )
