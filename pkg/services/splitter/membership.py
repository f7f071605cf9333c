"""Membership in the parts of S and in the polynomial-time separator D.

Deciding a part calls the exponential-time S decider; the r lookup itself is
cheap once the table prefix exists. Queries only read the table after it has
been extended to |x|, so a materialized table may be shared by readers but
must not be extended concurrently.
"""

from __future__ import annotations

from string import ascii_uppercase

from libs.common.errors import ConfigError

from .config import EngineConfig
from .engine import r
from .table import RTable


def part_name(part: int) -> str:
    return ascii_uppercase[part] if part < len(ascii_uppercase) else str(part)


def parse_part(raw: str, k: int) -> int:
    """Map ``A``/``B``/``C``... or a residue written in decimal to a part number."""
    text = raw.strip().upper()
    if text.isdigit():
        part = int(text)
    elif len(text) == 1 and text in ascii_uppercase:
        part = ascii_uppercase.index(text)
    else:
        raise ConfigError(f"unknown part {raw!r}")
    if part >= k:
        raise ConfigError(f"part {raw!r} does not exist for k = {k}")
    return part


def length_part(length: int, config: EngineConfig, cache: RTable | None = None) -> int:
    """The only part that may have members of this length: r(length) mod k."""
    return r(length, config, cache) % config.k


def member_part(x: str, part: int, config: EngineConfig, cache: RTable | None = None) -> bool:
    if not 0 <= part < config.k:
        raise ConfigError(f"part {part} outside 0..{config.k - 1}")
    if length_part(len(x), config, cache) != part:
        return False
    return config.s_decider.decide(x)


def member_A(x: str, config: EngineConfig, cache: RTable | None = None) -> bool:
    return member_part(x, 0, config, cache)


def member_B(x: str, config: EngineConfig, cache: RTable | None = None) -> bool:
    return member_part(x, 1, config, cache)


def member_D(x: str, config: EngineConfig, cache: RTable | None = None) -> bool:
    """x ∈ D iff r(|x|) is even; D separates A from B without consulting S."""
    if config.k != 2:
        raise ConfigError(f"the separator D is defined for k = 2 only, got k = {config.k}")
    return r(len(x), config, cache) % 2 == 0
