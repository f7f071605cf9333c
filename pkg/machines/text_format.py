"""Canonical machine text format and roster files.

A machine file has header lines naming the state count and the distinguished
states, then one transition per line::

    # copier: copies the input to the query tape, then asks the oracle
    states 5
    start 0
    accept 1
    reject 2
    query 3
    yes 4
    no 2
    0 0 -> 0 0 R emit=0
    0 1 -> 0 1 R emit=1
    0 _ -> 3 _ S
    4 _ -> 1 _ S

The blank symbol is ``_``. A roster file lists machine files, one per line,
relative to the roster file's directory; order is significant.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from libs.common.errors import ConfigError, MalformedMachineError

from .core import EMITS, MOVES, SYMBOLS, MachineDescription, Symbol, Transition

_HEADERS = ("states", "start", "accept", "reject", "query", "yes", "no")


def parse_machine(lines: Iterable[str], source: str = "<machine>") -> MachineDescription:
    header: dict[str, int] = {}
    transitions: dict[tuple[int, Symbol], Transition] = {}
    for lineno, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        tokens = text.split()
        where = f"{source}:{lineno}"
        if tokens[0] in _HEADERS:
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise MalformedMachineError(f"{where}: expected '{tokens[0]} N'")
            header[tokens[0]] = int(tokens[1])
            continue
        if len(tokens) not in (6, 7) or tokens[2] != "->":
            raise MalformedMachineError(f"{where}: expected 'state symbol -> state symbol move [emit=B]'")
        state, symbol, _, next_state, write, move = tokens[:6]
        emit: str | None = None
        if len(tokens) == 7:
            if not tokens[6].startswith("emit="):
                raise MalformedMachineError(f"{where}: unknown trailing token {tokens[6]!r}")
            emit = tokens[6][len("emit="):]
        if not state.isdigit() or not next_state.isdigit():
            raise MalformedMachineError(f"{where}: state ids must be naturals")
        if symbol not in SYMBOLS or write not in SYMBOLS or move not in MOVES or emit not in EMITS:
            raise MalformedMachineError(f"{where}: bad symbol, move or emit")
        key = (int(state), symbol)
        if key in transitions:
            raise MalformedMachineError(f"{where}: duplicate transition for {key}")
        transitions[key] = Transition(int(next_state), write, move, emit)  # type: ignore[arg-type]
    missing = [name for name in _HEADERS if name not in header]
    if missing:
        raise MalformedMachineError(f"{source}: missing header lines {', '.join(missing)}")
    return MachineDescription(
        state_count=header["states"],
        transitions=transitions,
        start_state=header["start"],
        accept_state=header["accept"],
        reject_state=header["reject"],
        query_state=header["query"],
        yes_state=header["yes"],
        no_state=header["no"],
    )


def render_machine(machine: MachineDescription) -> str:
    lines = [f"states {machine.state_count}"]
    lines.extend(f"{name} {state}" for name, state in zip(_HEADERS[1:], machine.distinguished()))
    for (state, symbol) in sorted(machine.transitions, key=lambda k: (k[0], SYMBOLS.index(k[1]))):
        tr = machine.transitions[(state, symbol)]
        line = f"{state} {symbol} -> {tr.next_state} {tr.write} {tr.move}"
        if tr.emit is not None:
            line += f" emit={tr.emit}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _read_lines(path: Path, what: str) -> list[str]:
    try:
        return path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read {what} {path}: {exc.strerror or exc}") from exc


def load_machine(path: str | Path) -> MachineDescription:
    path = Path(path)
    return parse_machine(_read_lines(path, "machine file"), str(path))


def load_roster(path: str | Path) -> tuple[MachineDescription, ...]:
    """Load every machine named by a roster file, in order."""
    path = Path(path)
    machines: list[MachineDescription] = []
    for line in _read_lines(path, "roster file"):
        entry = line.split("#", 1)[0].strip()
        if entry:
            machines.append(load_machine(path.parent / entry))
    return tuple(machines)
