"""Tests for config files, CLI overrides and the r-table cache session."""

from __future__ import annotations

from pathlib import Path

import pytest

from deciders import make_sat_sdecider
from ladder_split import TableSession, build_config, cache_dir, default_cache_path, load_config
from libs.common.errors import ConfigError
from machines import DUMMY
from machines.fixtures import copier
from services.splitter import DEPTH_FUNCTIONS, EngineConfig, extend_to, load_table

REPO_ROOT = Path(__file__).resolve().parents[1]
CONFIGS = REPO_ROOT / "tests" / "fixtures" / "configs"
ROSTERS = REPO_ROOT / "tests" / "fixtures" / "rosters"


def test_no_config_means_defaults() -> None:
    assert load_config() == EngineConfig()
    assert load_config(CONFIGS / "default.conf").fingerprint == EngineConfig().fingerprint


def test_accelerated_config_loads_its_roster() -> None:
    config = load_config(CONFIGS / "accelerated.conf")
    assert config.enumeration_mode.kind == "roster"
    assert config.enumeration_mode.roster == (DUMMY,)
    assert config.depth_fn == DEPTH_FUNCTIONS["halflog"]
    assert config.s_decider.exponent_c == 1


def test_cli_overrides_replace_the_roster() -> None:
    config = load_config(CONFIGS / "accelerated.conf", roster_file=ROSTERS / "mixed.roster")
    assert config.enumeration_mode.roster[0] == copier()
    goedel = load_config(CONFIGS / "accelerated.conf", enumeration="goedel")
    assert goedel.enumeration_mode.kind == "goedel"


def test_kway_config() -> None:
    config = load_config(CONFIGS / "kway.conf")
    assert config.k == 3
    assert config.start_r == 3


@pytest.mark.parametrize(
    "values, message",
    [
        ({"colour": "blue"}, "unknown config keys: colour"),
        ({"c": "two"}, "c must be a natural number"),
        ({"enumeration": "roster"}, "roster enumeration needs roster_file"),
        ({"enumeration": "random"}, "unknown enumeration"),
        ({"depth_fn": "sqrt"}, "unknown depth_fn"),
        ({"decider": "clique"}, "unknown decider"),
        ({"k": "3", "initial_r": "1"}, "initial_r must be >= k"),
    ],
)
def test_build_config_errors(values: dict[str, str], message: str) -> None:
    with pytest.raises(ConfigError, match=message):
        build_config(values)


def test_missing_roster_file_is_reported(tmp_path: Path) -> None:
    with pytest.raises(ConfigError, match="does not exist"):
        build_config({"enumeration": "roster", "roster_file": "nowhere.roster"}, tmp_path)


def test_unreadable_config_is_a_config_error(tmp_path: Path) -> None:
    with pytest.raises(ConfigError, match="cannot read config"):
        load_config(tmp_path / "absent.conf")
    with pytest.raises(ConfigError, match="unknown config keys"):
        load_config(CONFIGS / "unknown_key.conf")


def test_cache_dir_honours_the_environment(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    monkeypatch.setenv("LADDER_CACHE_DIR", str(tmp_path))
    assert cache_dir() == tmp_path
    config = EngineConfig(s_decider=make_sat_sdecider(3))
    assert default_cache_path(config) == tmp_path / f"rtable-{config.fingerprint}.txt"
    monkeypatch.delenv("LADDER_CACHE_DIR")
    assert cache_dir() == Path.home() / ".cache" / "ladder-split"


def test_session_saves_only_when_the_table_grew(tmp_path: Path) -> None:
    config = load_config(CONFIGS / "accelerated.conf")
    path = tmp_path / "rtable.txt"
    session = TableSession(config, path)
    session.save()
    assert not path.exists()

    extend_to(session.table, 300)
    session.save()
    reloaded = TableSession(config, path)
    assert reloaded.table.values == session.table.values
    mtime = path.stat().st_mtime_ns
    reloaded.save()
    assert path.stat().st_mtime_ns == mtime
    assert load_table(path, EngineConfig()) is None


def test_session_without_a_path_never_writes(tmp_path: Path) -> None:
    session = TableSession(EngineConfig(), None)
    session.table.values.append(2)
    session.save()
    assert list(tmp_path.iterdir()) == []
