"""Clocked enumeration M_1, M_2, ... and the universal simulation facade.

Goedel mode unpairs the index j with the Cantor pairing
π(a, b) = (a+b)(a+b+1)/2 + b, decodes the bijective binary expansion of a
(a ↦ bin(a+1) without its leading 1) into a program and clocks it with
exponent j. Every code therefore recurs at infinitely many indices with
ever larger clocks; b carries no other meaning.

Roster mode places hand-chosen machines at small indices: M_j runs
roster[(j-1) mod len(roster)], still clocked with exponent j.

Either way M_j gets exactly |x|^j + j steps on input x, and a run that exhausts
its budget counts as rejecting.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Literal

from libs.common.errors import ConfigError

from .codec import DUMMY, decode_program, encode_program
from .core import MachineDescription, Oracle, RunOutcome, is_well_formed, run


@dataclass(frozen=True)
class EnumerationMode:
    kind: Literal["goedel", "roster"] = "goedel"
    roster: tuple[MachineDescription, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("goedel", "roster"):
            raise ConfigError(f"unknown enumeration mode {self.kind!r}")
        if self.kind == "roster" and not self.roster:
            raise ConfigError("roster mode needs a nonempty roster")


GOEDEL = EnumerationMode()


@dataclass(frozen=True)
class ClockedMachine:
    index: int
    program: MachineDescription

    @property
    def clock_exponent(self) -> int:
        return self.index

    def budget(self, x: str) -> int:
        return len(x) ** self.index + self.index


def pair(a: int, b: int) -> int:
    return (a + b) * (a + b + 1) // 2 + b


def unpair(z: int) -> tuple[int, int]:
    w = (isqrt(8 * z + 1) - 1) // 2
    b = z - w * (w + 1) // 2
    return w - b, b


def code_of_number(a: int) -> str:
    return bin(a + 1)[3:]


def number_of_code(code: str) -> int:
    return int("1" + code, 2) - 1


_program_cache: dict[int, MachineDescription] = {}


def _goedel_program(a: int) -> MachineDescription:
    program = _program_cache.get(a)
    if program is None:
        program = decode_program(code_of_number(a))
        if len(_program_cache) < 65536:
            _program_cache[a] = program
    return program


def index_to_machine(j: int, mode: EnumerationMode = GOEDEL) -> ClockedMachine:
    if j < 1:
        raise ValueError(f"machine indices start at 1, got {j}")
    if mode.kind == "roster":
        return ClockedMachine(j, mode.roster[(j - 1) % len(mode.roster)])
    a, _ = unpair(j)
    return ClockedMachine(j, _goedel_program(a))


def universal_run(j: int, x: str, oracle: Oracle, mode: EnumerationMode = GOEDEL) -> RunOutcome:
    """Run M_j^oracle on x under its clock |x|^j + j."""
    machine = index_to_machine(j, mode)
    budget = machine.budget(x)
    outcome = run(machine.program, x, budget, oracle)
    assert outcome.steps_used <= budget, "simulated machine overran its clock"
    return outcome


def universal_accepts(j: int, x: str, oracle: Oracle, mode: EnumerationMode = GOEDEL) -> bool:
    return universal_run(j, x, oracle, mode).accepted


def goedel_index(program: MachineDescription, b: int = 0) -> int:
    """The index π(a, b) where a is the number of ``program``'s canonical code."""
    return pair(number_of_code(encode_program(program)), b)


def indices_of_program(program: MachineDescription, limit: int, mode: EnumerationMode = GOEDEL) -> list[int]:
    """All j ≤ limit whose program equals ``program``, ascending."""
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    if mode.kind == "roster":
        size = len(mode.roster)
        found: list[int] = []
        for pos, entry in enumerate(mode.roster):
            if entry == program:
                found.extend(range(pos + 1, limit + 1, size))
        return sorted(found)
    if program == DUMMY:
        # every malformed code lands here, so only a scan finds them all
        return [j for j in range(1, limit + 1) if index_to_machine(j).program == DUMMY]
    if not is_well_formed(program):
        return []
    found = []
    b = 0
    while (j := goedel_index(program, b)) <= limit:
        if j >= 1:
            found.append(j)
        b += 1
    return found
