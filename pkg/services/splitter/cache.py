"""Text persistence of r tables.

Layout::

    #rtable <fingerprint>
    #config c=2
    #config decider=sat
    ...
    0 2 - - - - - - - -
    1 2 - - - - - - - -
    2 2 - - - - - - - -
    3 2 0 1 1 1 0 - 0 0

Row i holds ``i r(i)`` followed by the event that produced r(i), i.e. the
event computed at step i-1: ``advanced gate_failed j part depth
witness_or_dash strings_examined max_qlen``. Rows 0..2 have no event. An
empty witness is written ``ε``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from libs.common.errors import ConfigError
from libs.common.logs import log

from .config import EngineConfig
from .table import DiagEvent, RTable

HEADER = "#rtable"
EMPTY_WITNESS = "ε"
DASH = "-"


def _flag(value: bool) -> str:
    return "1" if value else "0"


def _witness_text(witness: str | None) -> str:
    if witness is None:
        return DASH
    return witness or EMPTY_WITNESS


def render_rows(table: RTable) -> Iterable[list[str]]:
    """Yield the row fields of ``table``, one list per i."""
    for i, value in enumerate(table.values):
        if i < 3:
            yield [str(i), str(value)] + [DASH] * 8
            continue
        e = table.events[i - 3]
        yield [
            str(i),
            str(value),
            _flag(e.advanced),
            _flag(e.gate_failed),
            str(e.target_index),
            str(e.oracle_part),
            str(e.depth),
            _witness_text(e.witness),
            str(e.strings_examined),
            str(e.max_query_length),
        ]


def header_lines(config: EngineConfig) -> list[str]:
    lines = [f"{HEADER} {config.fingerprint}"]
    lines.extend(f"#config {entry}" for entry in config.canonical_document().splitlines())
    return lines


def render_table(table: RTable) -> str:
    lines = header_lines(table.config)
    lines.extend(" ".join(row) for row in render_rows(table))
    return "\n".join(lines) + "\n"


def event_from_fields(i: int, r_i: int, fields: list[str]) -> DiagEvent:
    advanced, gate_failed, j, part, depth, witness, examined, max_qlen = fields
    if witness == DASH:
        parsed_witness: str | None = None
    elif witness == EMPTY_WITNESS:
        parsed_witness = ""
    else:
        parsed_witness = witness
    return DiagEvent(
        i=i,
        r_i=r_i,
        target_index=int(j),
        oracle_part=int(part),
        depth=int(depth),
        gate_failed=gate_failed == "1",
        witness=parsed_witness,
        strings_examined=int(examined),
        max_query_length=int(max_qlen),
        advanced=advanced == "1",
    )


def fingerprint_of(text: str) -> str | None:
    first = text.split("\n", 1)[0].split()
    if len(first) == 2 and first[0] == HEADER:
        return first[1]
    return None


def inconsistency(event: DiagEvent, value: int, k: int) -> str | None:
    """Why the row r(i+1) = ``value`` cannot follow from ``event``, or None."""
    prev = event.r_i
    if value - prev != int(event.advanced):
        return f"r moves from {prev} to {value} with advanced={int(event.advanced)}"
    if event.target_index != prev // k or event.oracle_part != (prev + 1) % k:
        return f"target {event.target_index} against part {event.oracle_part} does not follow r = {prev}"
    if event.gate_failed and event.advanced:
        return "advanced although the gate failed"
    return None


def parse_table(text: str, config: EngineConfig) -> RTable:
    """Rebuild the longest consistent prefix of a table from its text form.

    Raises ConfigError on a fingerprint mismatch, a malformed line or wrong
    initial rows. A row whose value does not follow from its event ends the
    prefix; the caller recomputes from there.
    """
    found = fingerprint_of(text)
    if found != config.fingerprint:
        raise ConfigError(f"r-table fingerprint {found} does not match config {config.fingerprint}")
    table = RTable(config)
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 10 or int(fields[0]) != len(table.values):
            raise ConfigError(f"r-table line {lineno} is malformed: {line!r}")
        i, value = int(fields[0]), int(fields[1])
        if i < 3:
            if value != config.start_r:
                raise ConfigError(f"r-table line {lineno}: r({i}) = {value}, expected {config.start_r}")
            table.values.append(value)
            continue
        event = event_from_fields(i - 1, table.values[i - 1], fields[2:])
        problem = inconsistency(event, value, config.k)
        if problem is not None:
            log(f"r-table line {lineno}: {problem}; keeping r(0..{i - 1})")
            break
        table.events.append(event)
        table.values.append(value)
    if len(table.values) < 3:
        raise ConfigError("r-table holds fewer than three rows")
    return table


def save_table(path: str | Path, table: RTable) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(render_table(table), encoding="utf-8")
    tmp.replace(path)
    log(f"saved r-table up to n={table.last_index} to {path}")


def load_table(path: str | Path, config: EngineConfig) -> RTable | None:
    """Load a cached table, or None when it is missing or was built under another config."""
    path = Path(path)
    if not path.exists():
        return None
    try:
        return parse_table(path.read_text(encoding="utf-8"), config)
    except (ConfigError, ValueError) as exc:
        log(f"refusing r-table cache {path}: {exc}")
        return None
