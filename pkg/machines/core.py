"""Deterministic oracle Turing machine model and step-budgeted simulator.

A machine has one work tape over {0, 1, blank} that initially holds the input,
and a write-only query tape. Transitions may append a bit to the query tape.
Whenever the machine sits in ``query_state`` the next step is an oracle
consultation: the oracle is asked about the query tape, the query tape is
cleared and control moves to ``yes_state`` or ``no_state``.

Step accounting: one transition is one step and one consultation is one step,
regardless of query length. A missing transition from a non-halting state
halts and rejects without charging a step. Simulation overhead of a universal
machine is not modeled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Literal, Mapping

from libs.common.errors import MalformedMachineError

Symbol = Literal["0", "1", "_"]
Move = Literal["L", "R", "S"]
Verdict = Literal["accepted", "rejected", "budget_exhausted"]
Oracle = Callable[[str], bool]

BLANK: Symbol = "_"
SYMBOLS: tuple[Symbol, ...] = ("0", "1", "_")
MOVES: tuple[Move, ...] = ("L", "R", "S")
EMITS: tuple[str | None, ...] = (None, "0", "1")


@dataclass(frozen=True)
class Transition:
    next_state: int
    write: Symbol
    move: Move
    emit: str | None = None  # bit appended to the query tape, if any


@dataclass(frozen=True)
class MachineDescription:
    state_count: int
    transitions: Mapping[tuple[int, Symbol], Transition]
    start_state: int
    accept_state: int
    reject_state: int
    query_state: int
    yes_state: int
    no_state: int

    def __hash__(self) -> int:
        return hash(
            (
                self.state_count,
                tuple(sorted(self.transitions.items(), key=lambda kv: (kv[0][0], SYMBOLS.index(kv[0][1])))),
                self.distinguished(),
            )
        )

    def distinguished(self) -> tuple[int, int, int, int, int, int]:
        return (
            self.start_state,
            self.accept_state,
            self.reject_state,
            self.query_state,
            self.yes_state,
            self.no_state,
        )


@dataclass
class Configuration:
    state: int
    work_tape: dict[int, Symbol]
    head_position: int = 0
    query_tape: list[str] = field(default_factory=list)
    steps_taken: int = 0

    def read(self) -> Symbol:
        return self.work_tape.get(self.head_position, BLANK)


@dataclass(frozen=True)
class RunOutcome:
    verdict: Verdict
    steps_used: int
    queries: tuple[tuple[str, bool], ...] = ()

    @property
    def max_query_length(self) -> int:
        return max((len(q) for q, _ in self.queries), default=0)

    @property
    def accepted(self) -> bool:
        return self.verdict == "accepted"


def problems(machine: MachineDescription) -> list[str]:
    """Return every well-formedness violation of ``machine`` (empty when well formed)."""
    found: list[str] = []
    n = machine.state_count
    if n < 1:
        return [f"state_count must be >= 1, got {n}"]
    names = ("start", "accept", "reject", "query", "yes", "no")
    for name, state in zip(names, machine.distinguished()):
        if not 0 <= state < n:
            found.append(f"{name} state {state} is not < {n}")
    if machine.accept_state == machine.reject_state:
        found.append("accept and reject states coincide")
    if machine.query_state in (machine.accept_state, machine.reject_state):
        found.append("query state must not be a halting state")
    halting = {machine.accept_state, machine.reject_state, machine.query_state}
    for (state, symbol), tr in machine.transitions.items():
        if not 0 <= state < n:
            found.append(f"transition from dangling state {state}")
        if symbol not in SYMBOLS:
            found.append(f"transition on unknown symbol {symbol!r}")
        if not 0 <= tr.next_state < n:
            found.append(f"transition ({state}, {symbol}) targets dangling state {tr.next_state}")
        if tr.write not in SYMBOLS or tr.move not in MOVES or tr.emit not in EMITS:
            found.append(f"transition ({state}, {symbol}) has an invalid action {tr}")
        if state in halting:
            found.append(f"state {state} is accept, reject or query and must have no transitions")
    return found


def is_well_formed(machine: MachineDescription) -> bool:
    return not problems(machine)


def initial_configuration(machine: MachineDescription, input_bits: str) -> Configuration:
    tape: dict[int, Symbol] = {}
    for pos, ch in enumerate(input_bits):
        if ch not in "01":
            raise ValueError(f"input must be a bitstring, got {input_bits!r}")
        tape[pos] = "1" if ch == "1" else "0"
    return Configuration(state=machine.start_state, work_tape=tape)


def run(machine: MachineDescription, input_bits: str, budget: int, oracle: Oracle) -> RunOutcome:
    """Simulate ``machine`` on ``input_bits`` for at most ``budget`` steps."""
    issues = problems(machine)
    if issues:
        raise MalformedMachineError("; ".join(issues))
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")

    conf = initial_configuration(machine, input_bits)
    queries: list[tuple[str, bool]] = []
    while True:
        if conf.state == machine.accept_state:
            return RunOutcome("accepted", conf.steps_taken, tuple(queries))
        if conf.state == machine.reject_state:
            return RunOutcome("rejected", conf.steps_taken, tuple(queries))
        if conf.steps_taken >= budget:
            return RunOutcome("budget_exhausted", conf.steps_taken, tuple(queries))

        if conf.state == machine.query_state:
            query = "".join(conf.query_tape)
            answer = bool(oracle(query))
            queries.append((query, answer))
            conf.query_tape.clear()
            conf.state = machine.yes_state if answer else machine.no_state
            conf.steps_taken += 1
            continue

        tr = machine.transitions.get((conf.state, conf.read()))
        if tr is None:
            return RunOutcome("rejected", conf.steps_taken, tuple(queries))
        if tr.write == BLANK:
            conf.work_tape.pop(conf.head_position, None)
        else:
            conf.work_tape[conf.head_position] = tr.write
        if tr.emit is not None:
            conf.query_tape.append(tr.emit)
        if tr.move == "L":
            conf.head_position -= 1
        elif tr.move == "R":
            conf.head_position += 1
        conf.state = tr.next_state
        conf.steps_taken += 1
