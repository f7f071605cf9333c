"""Bitstring ordering and exact integer logarithms."""

from __future__ import annotations

from itertools import product
from typing import Iterator


def floor_log2(n: int) -> int:
    """Return ⌊log2 n⌋ for n ≥ 1."""
    if n < 1:
        raise ValueError(f"floor_log2 needs n >= 1, got {n}")
    return n.bit_length() - 1


def ceil_log2(n: int) -> int:
    """Return ⌈log2 n⌉ for n ≥ 1, so that 2^a ≥ n iff a ≥ ceil_log2(n)."""
    if n < 1:
        raise ValueError(f"ceil_log2 needs n >= 1, got {n}")
    return (n - 1).bit_length()


def length_lex(max_length: int) -> Iterator[str]:
    """Yield every bitstring of length ≤ max_length in length-then-lexicographic order."""
    for length in range(max_length + 1):
        for bits in product("01", repeat=length):
            yield "".join(bits)


def strings_up_to(max_length: int) -> list[str]:
    return list(length_lex(max_length))


def length_lex_key(s: str) -> tuple[int, str]:
    # ε < 0 < 1 < 00 < 01 < ...
    return (len(s), s)
