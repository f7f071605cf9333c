"""Tests for the shared helpers in libs/common."""

from __future__ import annotations

import math
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from libs.common import (
    ConfigError,
    LadderError,
    ceil_log2,
    floor_log2,
    format_verdict,
    length_lex,
    length_lex_key,
    log,
    parse_bits,
    parse_bounds,
    parse_key_values,
    strings_up_to,
)


@given(st.integers(min_value=1, max_value=2**200))
def test_integer_logs_bracket_n(n: int) -> None:
    assert 2 ** floor_log2(n) <= n < 2 ** (floor_log2(n) + 1)
    assert 2 ** ceil_log2(n) >= n
    assert ceil_log2(n) == 0 or 2 ** (ceil_log2(n) - 1) < n


def test_integer_logs_agree_with_math_on_small_values() -> None:
    for n in range(1, 5000):
        assert floor_log2(n) == math.floor(math.log2(n))
        assert ceil_log2(n) == math.ceil(math.log2(n))
    with pytest.raises(ValueError):
        ceil_log2(0)


def test_length_lex_order() -> None:
    assert strings_up_to(2) == ["", "0", "1", "00", "01", "10", "11"]
    assert len(list(length_lex(10))) == 2**11 - 1
    assert sorted(["1", "00", "", "0"], key=length_lex_key) == ["", "0", "1", "00"]


@pytest.mark.parametrize("raw, bits", [("0110", "0110"), (" 1 ", "1"), ("ε", ""), ("eps", ""), ("-", "")])
def test_parse_bits(raw: str, bits: str) -> None:
    assert parse_bits(raw) == bits


def test_parse_bits_rejects_other_characters() -> None:
    with pytest.raises(ValueError, match="not a bitstring"):
        parse_bits("0x1")


def test_parse_key_values() -> None:
    lines = ["# engine", "k = 3", "", "depth_fn=dlogloglog  # k-way"]
    assert parse_key_values(lines) == {"k": "3", "depth_fn": "dlogloglog"}
    with pytest.raises(ConfigError, match="duplicate key"):
        parse_key_values(["k = 2", "k = 3"])
    with pytest.raises(ConfigError, match="expected 'key = value'"):
        parse_key_values(["k 2"], "inline.conf")


def test_parse_bounds() -> None:
    assert parse_bounds(["maxlen=8", " n = 500"]) == {"maxlen": 8, "n": 500}
    assert parse_bounds([]) == {}
    for bad in ("maxlen", "maxlen=", "=3", "n=-1", "n=x"):
        with pytest.raises(ConfigError, match="expected key=N"):
            parse_bounds([bad])


def test_errors_share_a_base_class() -> None:
    assert issubclass(ConfigError, LadderError)
    assert issubclass(ConfigError, ValueError)


def test_format_verdict_names_the_outcome() -> None:
    assert "PASS" in format_verdict(True)
    assert "FAIL" in format_verdict(False)


def test_log_appends_timestamped_lines(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    target = tmp_path / "ladder.log"
    monkeypatch.setenv("LADDER_LOG", str(target))
    log("first")
    log("second")
    lines = target.read_text(encoding="utf-8").splitlines()
    assert [line.split(" - ", 1)[1] for line in lines] == ["first", "second"]
    monkeypatch.delenv("LADDER_LOG")
    log("dropped")
    assert len(target.read_text(encoding="utf-8").splitlines()) == 2
