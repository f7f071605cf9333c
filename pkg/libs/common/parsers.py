"""Parsing helpers shared across packages."""

from __future__ import annotations

from typing import Iterable

from .errors import ConfigError


def parse_bits(raw: str) -> str:
    """Normalize a command-line bitstring; ``ε``, ``eps`` and ``-`` denote the empty string."""
    text = raw.strip()
    if text in ("ε", "eps", "-"):
        return ""
    if any(ch not in "01" for ch in text):
        raise ValueError(f"not a bitstring: {raw!r}")
    return text


def parse_key_values(lines: Iterable[str], source: str = "<config>") -> dict[str, str]:
    """Parse flat ``key = value`` lines; ``#`` starts a comment."""
    values: dict[str, str] = {}
    for lineno, line in enumerate(lines, start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if "=" not in stripped:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {line.strip()!r}")
        key, value = (part.strip() for part in stripped.split("=", 1))
        if not key:
            raise ConfigError(f"{source}:{lineno}: empty key")
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        values[key] = value
    return values


def parse_bounds(items: Iterable[str]) -> dict[str, int]:
    """Parse ``key=N`` scan limits as given on the command line."""
    bounds: dict[str, int] = {}
    for item in items:
        key, sep, raw = item.partition("=")
        if not sep or not key.strip() or not raw.strip().isdigit():
            raise ConfigError(f"expected key=N, got {item!r}")
        bounds[key.strip()] = int(raw)
    return bounds
