"""Oracle Turing machines, their encoding and the clocked enumeration."""

from .codec import DUMMY, decode_program, encode_program
from .core import Configuration, MachineDescription, RunOutcome, Transition, is_well_formed, problems, run
from .enumeration import (
    GOEDEL,
    ClockedMachine,
    EnumerationMode,
    goedel_index,
    index_to_machine,
    indices_of_program,
    pair,
    universal_accepts,
    universal_run,
    unpair,
)
from .text_format import load_machine, load_roster, parse_machine, render_machine

__all__ = [
    "DUMMY",
    "GOEDEL",
    "ClockedMachine",
    "Configuration",
    "EnumerationMode",
    "MachineDescription",
    "RunOutcome",
    "Transition",
    "decode_program",
    "encode_program",
    "goedel_index",
    "index_to_machine",
    "indices_of_program",
    "is_well_formed",
    "load_machine",
    "load_roster",
    "pair",
    "parse_machine",
    "problems",
    "render_machine",
    "run",
    "universal_accepts",
    "universal_run",
    "unpair",
]
