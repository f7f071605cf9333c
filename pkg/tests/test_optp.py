"""Tests for the f/g composition over the two parts."""

from __future__ import annotations

from deciders import make_sat_sdecider, sat_brute
from libs.common.bitstrings import length_lex
from machines import EnumerationMode
from machines.fixtures import always_reject
from plugins import SplitHandles, compose_gf, f, g, optp_max, path_outputs_f, path_outputs_g, split_handles
from services.splitter import DEPTH_FUNCTIONS, EngineConfig, RTable, extend_to

DEFAULT = EngineConfig()
ACCELERATED = EngineConfig(
    s_decider=make_sat_sdecider(1),
    depth_fn=DEPTH_FUNCTIONS["halflog"],
    enumeration_mode=EnumerationMode("roster", (always_reject(),)),
)


def _handles_from_sets(a: set[str], b: set[str]) -> SplitHandles:
    return SplitHandles(member_A=a.__contains__, member_B=b.__contains__)


def test_optp_max_uses_the_standard_order() -> None:
    assert optp_max(["0", "1", "00"]) == "00"
    assert optp_max(["1", "0"]) == "1"
    assert optp_max([]) == ""


def test_f_sends_a_to_all_ones_and_the_rest_to_zero_x() -> None:
    h = _handles_from_sets({"01"}, {"10"})
    assert f("01", h) == "111"
    assert f("10", h) == "010"
    assert f("", h) == "0"
    assert path_outputs_f("01", h) == ["001", "111"]


def test_g_reads_the_first_bit_and_b() -> None:
    h = _handles_from_sets({"01"}, {"10"})
    assert g("111", h) == "1"
    assert g("010", h) == "1"
    assert g("011", h) == "0"
    assert g("", h) == "0"
    assert path_outputs_g("011", h) == ["0"]


def test_composition_is_the_characteristic_function_of_the_union() -> None:
    h = _handles_from_sets({"01"}, {"10"})
    assert [compose_gf(x, h) for x in ("01", "10", "11", "")] == ["1", "1", "0", "0"]
    assert h.chi_S("10") and not h.chi_S("11")


def test_composition_matches_sat_under_defaults() -> None:
    h = split_handles(DEFAULT)
    for x in length_lex(8):
        fx = f(x, h)
        assert len(fx) == len(x) + 1
        assert (compose_gf(x, h) == "1") == sat_brute(x)


def test_composition_after_r_advances() -> None:
    table = extend_to(RTable.fresh(ACCELERATED), 260)
    h = split_handles(ACCELERATED, table)
    # (v0) 82 times and (v0 ∨ v0) twice: 257 bits, the one length with odd r
    in_b = "0" + "100" * 82 + "10100" * 2
    assert len(in_b) == 257
    assert table.values[257] == 3
    assert h.member_B(in_b)
    assert f(in_b, h) == "0" + in_b
    assert compose_gf(in_b, h) == "1"
