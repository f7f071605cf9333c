"""The memoized r table and its per-step diagonalization log."""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import EngineConfig


@dataclass(frozen=True)
class DiagEvent:
    """One computation of r(i+1) from r(0..i)."""

    i: int
    r_i: int
    target_index: int
    oracle_part: int
    depth: int
    gate_failed: bool
    witness: str | None
    strings_examined: int
    max_query_length: int
    advanced: bool


@dataclass
class RTable:
    config: EngineConfig
    values: list[int] = field(default_factory=list)
    events: list[DiagEvent] = field(default_factory=list)

    @classmethod
    def fresh(cls, config: EngineConfig) -> RTable:
        return cls(config, [config.start_r] * 3, [])

    @property
    def last_index(self) -> int:
        return len(self.values) - 1

    def determined(self, length: int) -> bool:
        return 0 <= length < len(self.values)

    def truncated(self, n: int) -> RTable:
        """A copy holding values[0..n] and the events that produced them."""
        n = max(n, 2)
        return RTable(self.config, self.values[: n + 1], self.events[: max(0, n - 2)])
