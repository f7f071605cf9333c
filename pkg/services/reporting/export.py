"""Trace export in the cache text schema or as CSV."""

from __future__ import annotations

import csv
import io
from typing import Literal

from services.splitter import EngineConfig, RTable, parse_table
from services.splitter.cache import DASH, event_from_fields, header_lines, render_rows

TraceFormat = Literal["text", "csv"]

CSV_COLUMNS = [
    "i",
    "r",
    "advanced",
    "gate_failed",
    "target",
    "part",
    "depth",
    "witness",
    "strings_examined",
    "max_query_length",
]


def _keep(row: list[str], only_advanced: bool) -> bool:
    # the three initial rows always stay so a filtered trace still shows r(0..2)
    return not only_advanced or int(row[0]) < 3 or row[2] == "1"


def export_trace(table: RTable, fmt: TraceFormat = "text", only_advanced: bool = False) -> bytes:
    """Render ``table`` as the cache text schema or as CSV."""
    rows = [row for row in render_rows(table) if _keep(row, only_advanced)]
    if fmt == "text":
        lines = header_lines(table.config) + [" ".join(row) for row in rows]
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["#fingerprint", table.config.fingerprint, f"enumeration={table.config.enumeration_mode.kind}"])
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(["" if value == DASH else value for value in row])
        return buffer.getvalue().encode("utf-8")
    raise ValueError(f"unknown trace format {fmt!r}")


def import_trace(data: bytes, config: EngineConfig, fmt: TraceFormat = "text") -> RTable:
    """Inverse of :func:`export_trace` for unfiltered traces."""
    text = data.decode("utf-8")
    if fmt == "text":
        return parse_table(text, config)
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0][:2] != ["#fingerprint", config.fingerprint]:
        raise ValueError("csv trace was not produced under this configuration")
    table = RTable(config)
    for row in rows[2:]:
        i, value = int(row[0]), int(row[1])
        if i != len(table.values):
            raise ValueError(f"csv trace skips from r({len(table.values) - 1}) to r({i})")
        if i >= 3:
            fields = [cell if cell != "" else DASH for cell in row[2:]]
            table.events.append(event_from_fields(i - 1, table.values[i - 1], fields))
        table.values.append(value)
    return table
