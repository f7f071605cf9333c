"""Tests for the ``ladder`` command line and scripts/run_suites.py."""

from __future__ import annotations

import hashlib
import json
import os
import subprocess
import sys
from pathlib import Path
from typing import Dict, List

import pytest
from click.testing import CliRunner, Result

from ladder_split import load_config
from ladder_split.main import cli
from machines import DUMMY, encode_program

REPO_ROOT = Path(__file__).resolve().parents[1]
CONFIGS = REPO_ROOT / "tests" / "fixtures" / "configs"
ACCELERATED = str(CONFIGS / "accelerated.conf")
KWAY = str(CONFIGS / "kway.conf")


@pytest.fixture(autouse=True)
def _isolated_cache(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.setenv("LADDER_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.delenv("LADDER_LOG", raising=False)


def _invoke(args: List[str], stdin: str | None = None) -> Result:
    return CliRunner().invoke(cli, args, input=stdin)


def _load_snapshot(snapshot_path: Path) -> str:
    raw = snapshot_path.read_text(encoding="utf-8")
    roster_digest = hashlib.sha256(encode_program(DUMMY).encode("ascii") + b"\n").hexdigest()
    replacements = {
        "__FINGERPRINT__": load_config(ACCELERATED).fingerprint,
        "__ROSTER_DIGEST__": roster_digest,
    }
    for placeholder, value in replacements.items():
        raw = raw.replace(placeholder, value)
    return raw


def _run_script(args: List[str], tmp_path: Path) -> subprocess.CompletedProcess[str]:
    env: Dict[str, str] = os.environ.copy()
    env["PYTHONPATH"] = str(REPO_ROOT)
    env["LADDER_CACHE_DIR"] = str(tmp_path / "cache")
    cmd = [sys.executable, str(REPO_ROOT / "scripts" / "run_suites.py"), *args]
    return subprocess.run(cmd, cwd=REPO_ROOT, env=env, text=True, capture_output=True, check=False)


# -------------------------
# Queries
# -------------------------
def test_trace_matches_expected_snapshot() -> None:
    result = _invoke(["--config", ACCELERATED, "--no-cache", "trace", "--upto", "10"])
    assert result.exit_code == 0, result.output
    assert result.output == _load_snapshot(REPO_ROOT / "tests/expected_outputs/accelerated_trace_10.txt")


def test_trace_csv_only_advanced() -> None:
    result = _invoke(["--config", ACCELERATED, "--no-cache", "trace", "--upto", "260", "--format", "csv", "--only-advanced"])
    assert result.exit_code == 0, result.output
    rows = result.output.splitlines()
    assert rows[0].startswith("#fingerprint,")
    assert [row.split(",")[0] for row in rows[2:]] == ["0", "1", "2", "257", "258"]


def test_r_uses_and_fills_the_cache(tmp_path: Path) -> None:
    cache = tmp_path / "rtable.txt"
    result = _invoke(["--config", ACCELERATED, "--cache", str(cache), "r", "--n", "257"])
    assert (result.exit_code, result.output) == (0, "3\n")
    assert cache.read_text(encoding="utf-8").startswith("#rtable ")
    again = _invoke(["--config", ACCELERATED, "--cache", str(cache), "r", "--n", "256"])
    assert (again.exit_code, again.output) == (0, "2\n")


def test_default_cache_lands_in_the_cache_dir(tmp_path: Path) -> None:
    result = _invoke(["--config", ACCELERATED, "r", "--n", "20"])
    assert result.exit_code == 0, result.output
    fingerprint = load_config(ACCELERATED).fingerprint
    assert (tmp_path / "cache" / f"rtable-{fingerprint}.txt").exists()


def test_member_and_separator() -> None:
    assert _invoke(["--no-cache", "member", "--part", "A", "--x", "0100"]).output == "true\n"
    assert _invoke(["--no-cache", "member", "--part", "B", "--x", "0100"]).output == "false\n"
    assert _invoke(["--no-cache", "member-d", "--x", "ε"]).output == "true\n"


def test_compose_prints_the_three_values() -> None:
    result = _invoke(["--no-cache", "compose", "--x", "0100"])
    assert result.exit_code == 0, result.output
    assert result.output.splitlines() == ["f(x) = 11111", "g(f(x)) = 1", "chi_S(x) = 1"]


def test_cnf_commands() -> None:
    assert _invoke(["encode-cnf"], "p cnf 1 1\n1 0\n").output == "0100\n"
    assert _invoke(["sat", "--y", "0110"]).output == "true\n"
    assert _invoke(["sat", "--y", "0100110"]).output == "false\n"
    assert _invoke(["decode", "--y", "0110"]).output == "1 variables: (¬v0)\n"
    assert _invoke(["decode", "--y", "0"]).output == "absent\n"


# -------------------------
# Verification
# -------------------------
def test_verify_passes_and_prints_verdicts() -> None:
    result = _invoke(["--config", ACCELERATED, "--no-cache", "verify", "--suite", "observability", "--bound", "upto=300"])
    assert result.exit_code == 0, result.output
    assert "PASS" in result.output
    assert "observability: passed" in result.output


def test_verify_exits_one_on_failure() -> None:
    result = _invoke(["verify", "--suite", "observability", "--bound", "upto=50"])
    assert result.exit_code == 1
    assert "FAIL" in result.output
    assert "r stayed 2 up to i = 50" in result.output


def test_compose_verify() -> None:
    result = _invoke(["compose-verify", "--maxlen", "6"])
    assert result.exit_code == 0, result.output


# -------------------------
# Errors
# -------------------------
def test_config_errors_are_json_with_status_two(tmp_path: Path) -> None:
    result = _invoke(["--config", str(tmp_path / "absent.conf"), "r", "--n", "3"])
    assert result.exit_code == 2
    assert "cannot read config" in json.loads(result.output)["error"]


def test_domain_errors_are_json_with_status_two() -> None:
    wrong_part = _invoke(["--no-cache", "member", "--part", "C", "--x", "0"])
    assert wrong_part.exit_code == 2
    assert json.loads(wrong_part.output) == {"error": "part 'C' does not exist for k = 2"}

    two_way = _invoke(["--config", KWAY, "verify", "--suite", "separator"])
    assert two_way.exit_code == 2
    assert "k = 2" in json.loads(two_way.output)["error"]

    bad_cnf = _invoke(["encode-cnf"], "c nothing\n")
    assert bad_cnf.exit_code == 2
    assert json.loads(bad_cnf.output) == {"error": "no clauses"}


def test_roster_naming_a_missing_machine_is_json_with_status_two(tmp_path: Path) -> None:
    roster = tmp_path / "broken.roster"
    roster.write_text("missing.tm\n", encoding="utf-8")
    result = _invoke(["--no-cache", "--enumeration", "roster", "--roster-file", str(roster), "r", "--n", "5"])
    assert result.exit_code == 2
    assert "missing.tm" in json.loads(result.output)["error"]


def test_unknown_bound_keys_are_json_with_status_two() -> None:
    result = _invoke(["--no-cache", "verify", "--suite", "partition", "--bound", "maxln=3"])
    assert result.exit_code == 2
    assert json.loads(result.output) == {"error": "unknown bound 'maxln'"}


def test_bad_bitstrings_are_usage_errors() -> None:
    result = _invoke(["sat", "--y", "012"])
    assert result.exit_code == 2
    assert "not a bitstring" in result.output


# -------------------------
# scripts/run_suites.py
# -------------------------
def test_run_suites_script_reports_json(tmp_path: Path) -> None:
    result = _run_script(["--config", ACCELERATED, "--suite", "observability", "--bound", "upto=300"], tmp_path)
    assert result.returncode == 0, result.stderr
    payload = json.loads(result.stdout)
    assert payload["passed"] is True
    assert payload["fingerprint"] == load_config(ACCELERATED).fingerprint
    assert set(payload["suites"]) == {"observability"}


def test_run_suites_script_picks_suites_for_k(tmp_path: Path) -> None:
    bounds = ["maxlen=5", "n=500", "gate_i=100", "gate_r=9", "sat_len=8", "kway_maxlen=5", "kway_n=200"]
    args = ["--config", KWAY]
    for bound in bounds:
        args += ["--bound", bound]
    result = _run_script(args, tmp_path)
    assert result.returncode == 0, result.stdout + result.stderr
    payload = json.loads(result.stdout)
    assert set(payload["suites"]) == {
        "partition",
        "rtable",
        "noncircular",
        "gate-oracle",
        "enumeration",
        "kway",
        "sat-oracle",
    }


def test_run_suites_script_reports_errors(tmp_path: Path) -> None:
    result = _run_script(["--config", str(tmp_path / "absent.conf")], tmp_path)
    assert result.returncode == 2
    assert "error" in json.loads(result.stdout)
