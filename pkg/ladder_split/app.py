"""Application wiring: config files, CLI overrides and the r-table cache location."""

from __future__ import annotations

import os
from pathlib import Path

from deciders import make_sdecider
from libs.common.errors import ConfigError
from libs.common.parsers import parse_key_values
from machines import GOEDEL, EnumerationMode, load_roster
from services.splitter import EngineConfig, RTable, depth_function, load_table, save_table

CONFIG_KEYS = ("decider", "c", "k", "depth_fn", "enumeration", "roster_file", "initial_r")
CACHE_DIR_ENV = "LADDER_CACHE_DIR"


def _natural(values: dict[str, str], key: str) -> int | None:
    raw = values.get(key)
    if raw is None:
        return None
    if not raw.isdigit():
        raise ConfigError(f"{key} must be a natural number, got {raw!r}")
    return int(raw)


def build_config(
    values: dict[str, str],
    base_dir: Path = Path("."),
    enumeration: str | None = None,
    roster_file: str | Path | None = None,
) -> EngineConfig:
    """Resolve flat config values (plus CLI overrides) into an EngineConfig."""
    unknown = sorted(set(values) - set(CONFIG_KEYS))
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
    decider = make_sdecider(values.get("decider", "sat"), _natural(values, "c"))
    kind = enumeration or values.get("enumeration", "goedel")
    roster_path: Path | None = None
    if roster_file is not None:
        roster_path = Path(roster_file)
    elif "roster_file" in values:
        roster_path = base_dir / values["roster_file"]
    if kind == "roster":
        if roster_path is None:
            raise ConfigError("roster enumeration needs roster_file")
        if not roster_path.exists():
            raise ConfigError(f"roster file {roster_path} does not exist")
        mode = EnumerationMode("roster", load_roster(roster_path))
    elif kind == "goedel":
        mode = GOEDEL
    else:
        raise ConfigError(f"unknown enumeration {kind!r}")
    k = _natural(values, "k")
    return EngineConfig(
        s_decider=decider,
        k=2 if k is None else k,
        depth_fn=depth_function(values.get("depth_fn", "dloglog")),
        enumeration_mode=mode,
        initial_r=_natural(values, "initial_r"),
    )


def load_config(
    path: str | Path | None = None,
    enumeration: str | None = None,
    roster_file: str | Path | None = None,
) -> EngineConfig:
    if path is None:
        return build_config({}, enumeration=enumeration, roster_file=roster_file)
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return build_config(parse_key_values(lines, str(path)), path.parent, enumeration, roster_file)


def cache_dir() -> Path:
    override = os.environ.get(CACHE_DIR_ENV)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "ladder-split"


def default_cache_path(config: EngineConfig) -> Path:
    return cache_dir() / f"rtable-{config.fingerprint}.txt"


class TableSession:
    """Load the cached table for a config, and save it back when it grew."""

    def __init__(self, config: EngineConfig, path: Path | None) -> None:
        self.config = config
        self.path = path
        loaded = load_table(path, config) if path is not None else None
        self.table = loaded if loaded is not None else RTable.fresh(config)
        self._loaded_length = len(self.table.values)

    def save(self) -> None:
        if self.path is not None and len(self.table.values) > self._loaded_length:
            save_table(self.path, self.table)
