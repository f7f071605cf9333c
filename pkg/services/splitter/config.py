"""Engine configuration, depth functions and the config fingerprint."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from deciders import SDecider, make_sat_sdecider
from libs.common.bitstrings import floor_log2
from libs.common.errors import ConfigError
from machines import GOEDEL, EnumerationMode, encode_program


def _nested_log(i: int, depth: int) -> int:
    value = i
    for _ in range(depth):
        value = floor_log2(max(1, value))
    return value


def dloglog(i: int) -> int:
    """⌊log2 max(1, ⌊log2 i⌋)⌋ for i ≥ 2, else 0."""
    return _nested_log(i, 2) if i >= 2 else 0


def dlogloglog(i: int) -> int:
    return _nested_log(i, 3) if i >= 2 else 0


def dlog(i: int) -> int:
    return floor_log2(i) if i >= 2 else 0


def halflog(i: int) -> int:
    return floor_log2(i) // 2 if i >= 2 else 0


@dataclass(frozen=True)
class DepthFunction:
    name: str
    fn: Callable[[int], int] = field(compare=False)

    def __call__(self, i: int) -> int:
        return self.fn(i)


DEPTH_FUNCTIONS: dict[str, DepthFunction] = {
    f.name: f
    for f in (
        DepthFunction("dloglog", dloglog),
        DepthFunction("dlogloglog", dlogloglog),
        DepthFunction("log", dlog),
        DepthFunction("halflog", halflog),
    )
}


def depth_function(name: str) -> DepthFunction:
    try:
        return DEPTH_FUNCTIONS[name]
    except KeyError:
        raise ConfigError(f"unknown depth_fn {name!r}; known: {', '.join(DEPTH_FUNCTIONS)}") from None


@dataclass(frozen=True)
class EngineConfig:
    s_decider: SDecider = field(default_factory=make_sat_sdecider)
    k: int = 2
    depth_fn: DepthFunction = DEPTH_FUNCTIONS["dloglog"]
    enumeration_mode: EnumerationMode = GOEDEL
    # None means k, so r(0) = r(1) = r(2) = 2 when k = 2
    initial_r: int | None = None

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ConfigError(f"team count k must be >= 2, got {self.k}")
        if self.initial_r is not None and self.initial_r < self.k:
            raise ConfigError(f"initial_r must be >= k = {self.k} so the first target index is >= 1")

    @property
    def start_r(self) -> int:
        return self.k if self.initial_r is None else self.initial_r

    def canonical_document(self) -> str:
        entries = {
            "decider": self.s_decider.name,
            "c": str(self.s_decider.exponent_c),
            "k": str(self.k),
            "depth_fn": self.depth_fn.name,
            "enumeration": self.enumeration_mode.kind,
            "initial_r": str(self.start_r),
        }
        if self.enumeration_mode.kind == "roster":
            digest = hashlib.sha256()
            for machine in self.enumeration_mode.roster:
                digest.update(encode_program(machine).encode("ascii"))
                digest.update(b"\n")
            entries["roster"] = digest.hexdigest()
        return "".join(f"{key}={entries[key]}\n" for key in sorted(entries))

    @cached_property
    def fingerprint(self) -> str:
        return hashlib.sha256(self.canonical_document().encode("utf-8")).hexdigest()[:16]
