"""Hand-built machines used by the roster mode, the suites and the tests."""

from __future__ import annotations

from .codec import DUMMY
from .core import SYMBOLS, MachineDescription, Transition


def dummy_rejector() -> MachineDescription:
    return DUMMY


def always_reject() -> MachineDescription:
    # the canonical dummy already rejects every input in one step
    return DUMMY


def always_accept() -> MachineDescription:
    return MachineDescription(
        state_count=4,
        transitions={(0, sym): Transition(1, sym, "S") for sym in SYMBOLS},
        start_state=0,
        accept_state=1,
        reject_state=2,
        query_state=3,
        yes_state=1,
        no_state=2,
    )


def copier() -> MachineDescription:
    """Copy the input to the query tape, ask the oracle, accept iff it says yes.

    On input x it uses |x| + 3 steps: |x| copies, one move into the query
    state, the consultation, and one step from the yes state to accept.
    """
    return MachineDescription(
        state_count=5,
        transitions={
            (0, "0"): Transition(0, "0", "R", "0"),
            (0, "1"): Transition(0, "1", "R", "1"),
            (0, "_"): Transition(3, "_", "S"),
            (4, "0"): Transition(1, "0", "S"),
            (4, "1"): Transition(1, "1", "S"),
            (4, "_"): Transition(1, "_", "S"),
        },
        start_state=0,
        accept_state=1,
        reject_state=2,
        query_state=3,
        yes_state=4,
        no_state=2,
    )


def right_mover() -> MachineDescription:
    """Move right forever; only the budget stops it."""
    return MachineDescription(
        state_count=4,
        transitions={(0, sym): Transition(0, sym, "R") for sym in SYMBOLS},
        start_state=0,
        accept_state=1,
        reject_state=2,
        query_state=3,
        yes_state=1,
        no_state=2,
    )
