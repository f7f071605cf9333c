"""Tests for the clocked enumeration and the universal simulation facade."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from libs.common.errors import ConfigError
from machines import (
    DUMMY,
    GOEDEL,
    EnumerationMode,
    encode_program,
    goedel_index,
    index_to_machine,
    indices_of_program,
    pair,
    universal_accepts,
    universal_run,
    unpair,
)
from machines.enumeration import code_of_number, number_of_code
from machines.fixtures import always_accept, copier, right_mover

ROSTER = EnumerationMode("roster", (copier(), always_accept(), DUMMY))


def _echo(q: str) -> bool:
    return q.endswith("1")


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=10**12), st.integers(min_value=0, max_value=10**12))
def test_unpair_inverts_pair(a: int, b: int) -> None:
    assert unpair(pair(a, b)) == (a, b)


def test_pairing_walks_the_diagonals() -> None:
    assert [unpair(z) for z in range(6)] == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def test_bijective_binary_lists_every_code_once() -> None:
    assert [code_of_number(a) for a in range(7)] == ["", "0", "1", "00", "01", "10", "11"]
    assert all(number_of_code(code_of_number(a)) == a for a in range(500))


def test_goedel_index_decodes_back_to_the_program() -> None:
    for program in (copier(), always_accept(), right_mover()):
        for b in range(3):
            j = goedel_index(program, b)
            assert index_to_machine(j).program == program
            assert index_to_machine(j).clock_exponent == j


def test_every_program_recurs_with_growing_clocks() -> None:
    program = always_accept()
    limit = goedel_index(program, 4)
    found = indices_of_program(program, limit)
    assert found == [goedel_index(program, b) for b in range(5)]
    assert found == sorted(set(found))


def test_dummy_indices_come_from_a_scan() -> None:
    found = indices_of_program(DUMMY, 50)
    assert len(found) >= 2
    assert all(index_to_machine(j).program == DUMMY for j in found)
    assert all(index_to_machine(j).program != DUMMY for j in range(1, 51) if j not in found)


def test_index_zero_is_not_a_machine() -> None:
    with pytest.raises(ValueError):
        index_to_machine(0)


def test_roster_mode_cycles_through_the_roster() -> None:
    assert [index_to_machine(j, ROSTER).program for j in range(1, 7)] == [
        copier(),
        always_accept(),
        DUMMY,
        copier(),
        always_accept(),
        DUMMY,
    ]
    assert indices_of_program(always_accept(), 10, ROSTER) == [2, 5, 8]


def test_roster_mode_needs_machines() -> None:
    with pytest.raises(ConfigError):
        EnumerationMode("roster", ())
    with pytest.raises(ConfigError):
        EnumerationMode("alphabetical")  # type: ignore[arg-type]


def test_clock_is_input_length_to_the_index_plus_index() -> None:
    machine = index_to_machine(4, ROSTER)
    assert machine.budget("101") == 3**4 + 4
    assert machine.budget("") == 4


def test_universal_run_cuts_the_copier_off_at_its_clock() -> None:
    # M_1 = copier with budget |x| + 1: never reaches its consultation
    outcome = universal_run(1, "0011", _echo, ROSTER)
    assert outcome.verdict == "budget_exhausted"
    assert outcome.steps_used == 5
    # M_4 = copier with budget |x|^4 + 4
    assert universal_accepts(4, "0011", _echo, ROSTER)
    assert not universal_accepts(4, "0110", _echo, ROSTER)


def test_goedel_mode_runs_malformed_codes_as_the_dummy() -> None:
    j = pair(number_of_code("11"), 3)
    outcome = universal_run(j, "0100", _echo, GOEDEL)
    assert (outcome.verdict, outcome.steps_used) == ("rejected", 1)


def test_goedel_code_of_the_copier_is_reachable() -> None:
    a = number_of_code(encode_program(copier()))
    assert code_of_number(a) == encode_program(copier())
