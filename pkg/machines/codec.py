"""Canonical binary encoding of machine descriptions.

Every natural n is written as the Elias gamma code of n + 1: ``len-1`` zeros
followed by the binary expansion of n + 1. A program is

    gamma(state_count) gamma(start) gamma(accept) gamma(reject)
    gamma(query) gamma(yes) gamma(no) gamma(transition_count)

followed by one record per transition, in ascending (state, symbol) order:

    gamma(state) sym2 gamma(next_state) sym2 move2 emit2

with ``sym2`` 00/01/10 for 0/1/blank, ``move2`` 00/01/10 for L/R/S and
``emit2`` 00/01/10 for none/0/1. Code 11 is reserved. The string must end
exactly after the last record.

``decode_program`` is total: anything that is not the canonical encoding of a
well-formed machine decodes to :data:`DUMMY`.
"""

from __future__ import annotations

from .core import (
    EMITS,
    MOVES,
    SYMBOLS,
    MachineDescription,
    Symbol,
    Transition,
    is_well_formed,
    problems,
)

DUMMY = MachineDescription(
    state_count=4,
    transitions={(0, sym): Transition(2, sym, "S") for sym in SYMBOLS},
    start_state=0,
    accept_state=1,
    reject_state=2,
    query_state=3,
    yes_state=1,
    no_state=2,
)


class _Malformed(Exception):
    pass


def gamma(n: int) -> str:
    body = bin(n + 1)[2:]
    return "0" * (len(body) - 1) + body


class _Reader:
    def __init__(self, code: str) -> None:
        self.code = code
        self.pos = 0

    def bit(self) -> str:
        if self.pos >= len(self.code):
            raise _Malformed("unexpected end of code")
        ch = self.code[self.pos]
        self.pos += 1
        return ch

    def natural(self) -> int:
        zeros = 0
        while self.bit() == "0":
            zeros += 1
        value = 1
        for _ in range(zeros):
            value = (value << 1) | (self.bit() == "1")
        return value - 1

    def choice(self, options: tuple):
        index = int(self.bit() + self.bit(), 2)
        if index >= len(options):
            raise _Malformed("reserved two-bit code")
        return options[index]

    def done(self) -> bool:
        return self.pos == len(self.code)


def _two_bits(index: int) -> str:
    return format(index, "02b")


def _sort_key(key: tuple[int, Symbol]) -> tuple[int, int]:
    return (key[0], SYMBOLS.index(key[1]))


def encode_program(machine: MachineDescription) -> str:
    """Return the canonical code of a well-formed machine."""
    issues = problems(machine)
    if issues:
        raise ValueError(f"cannot encode a malformed machine: {'; '.join(issues)}")
    parts = [gamma(machine.state_count)]
    parts.extend(gamma(state) for state in machine.distinguished())
    parts.append(gamma(len(machine.transitions)))
    for key in sorted(machine.transitions, key=_sort_key):
        tr = machine.transitions[key]
        parts.append(gamma(key[0]))
        parts.append(_two_bits(SYMBOLS.index(key[1])))
        parts.append(gamma(tr.next_state))
        parts.append(_two_bits(SYMBOLS.index(tr.write)))
        parts.append(_two_bits(MOVES.index(tr.move)))
        parts.append(_two_bits(EMITS.index(tr.emit)))
    return "".join(parts)


def _decode_strict(code: str) -> MachineDescription:
    reader = _Reader(code)
    state_count = reader.natural()
    start, accept, reject, query, yes, no = (reader.natural() for _ in range(6))
    count = reader.natural()
    # every record needs at least 10 bits; rejects absurd counts early
    if count * 10 > len(code):
        raise _Malformed("transition count exceeds code length")
    transitions: dict[tuple[int, Symbol], Transition] = {}
    previous: tuple[int, int] | None = None
    for _ in range(count):
        state = reader.natural()
        symbol = reader.choice(SYMBOLS)
        key = (state, symbol)
        if previous is not None and _sort_key(key) <= previous:
            raise _Malformed("transitions out of canonical order")
        previous = _sort_key(key)
        next_state = reader.natural()
        write = reader.choice(SYMBOLS)
        move = reader.choice(MOVES)
        emit = reader.choice(EMITS)
        transitions[key] = Transition(next_state, write, move, emit)
    if not reader.done():
        raise _Malformed("trailing bits")
    machine = MachineDescription(state_count, transitions, start, accept, reject, query, yes, no)
    if not is_well_formed(machine):
        raise _Malformed("ill-formed table")
    return machine


def decode_program(code: str) -> MachineDescription:
    """Decode ``code``; malformed codes yield the one-step dummy rejector."""
    try:
        return _decode_strict(code)
    except _Malformed:
        return DUMMY


def is_canonical_code(code: str) -> bool:
    try:
        _decode_strict(code)
    except _Malformed:
        return False
    return True
