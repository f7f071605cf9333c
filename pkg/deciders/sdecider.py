"""Pluggable exponential-time deciders for the set S being split."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Protocol

from libs.common.errors import ConfigError

from .sat import sat_brute


class CostFunction(Protocol):
    def __call__(self, t: int) -> int: ...


@dataclass(frozen=True)
class ExponentialCost:
    """T ↦ 2^(T^c); ``log2`` gives the exponent so callers never build the power."""

    c: int

    def __call__(self, t: int) -> int:
        return 1 << self.log2(t)

    def log2(self, t: int) -> int:
        return t**self.c


@dataclass(frozen=True)
class SDecider:
    name: str
    decide: Callable[[str], bool]
    exponent_c: int
    cost_fn: CostFunction

    def __post_init__(self) -> None:
        if self.exponent_c < 1:
            raise ConfigError(f"decider exponent c must be >= 1, got {self.exponent_c}")


def make_sat_sdecider(c: int = 2) -> SDecider:
    """S = SAT, decided by brute force; c = 2 is the validated default exponent."""
    return SDecider(name="sat", decide=sat_brute, exponent_c=c, cost_fn=ExponentialCost(c))


DECIDERS: dict[str, Callable[[int], SDecider]] = {"sat": make_sat_sdecider}


def make_sdecider(name: str, c: int | None = None) -> SDecider:
    try:
        factory = DECIDERS[name]
    except KeyError:
        raise ConfigError(f"unknown decider {name!r}; known: {', '.join(sorted(DECIDERS))}") from None
    return factory(2 if c is None else c)
