"""Function composition built on top of the splitting service.

f sends members of A to 1^(|x|+1) and everything else to 0x; g answers 1 on
strings starting with 1 and on 0x with x ∈ B. Neither looks at S directly,
yet g(f(x)) is the characteristic function of S = A ∪ B.

The OptP reading is kept at host level: each function is the maximum, in the
standard order ε < 0 < 1 < 00 < ..., of the values its certificate paths
would output. No nondeterministic machine is simulated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from libs.common.bitstrings import length_lex_key
from services.splitter import EngineConfig, RTable, member_A, member_B

Membership = Callable[[str], bool]


@dataclass(frozen=True)
class SplitHandles:
    member_A: Membership
    member_B: Membership

    def chi_S(self, x: str) -> bool:
        return self.member_A(x) or self.member_B(x)


def split_handles(config: EngineConfig, table: RTable | None = None) -> SplitHandles:
    """Handles for the two parts of a k = 2 split sharing one r table."""
    shared = table if table is not None else RTable.fresh(config)
    return SplitHandles(
        member_A=lambda x: member_A(x, config, shared),
        member_B=lambda x: member_B(x, config, shared),
    )


def optp_max(outputs: Iterable[str]) -> str:
    """Maximum in the standard order; paths that output nothing count as ε."""
    return max(outputs, key=length_lex_key, default="")


def path_outputs_f(x: str, h: SplitHandles) -> list[str]:
    outputs = ["0" + x]
    if h.member_A(x):
        outputs.append("1" * (len(x) + 1))
    return outputs


def path_outputs_g(z: str, h: SplitHandles) -> list[str]:
    outputs = ["0"]
    if z.startswith("1") or (z.startswith("0") and h.member_B(z[1:])):
        outputs.append("1")
    return outputs


def f(x: str, h: SplitHandles) -> str:
    return optp_max(path_outputs_f(x, h))


def g(z: str, h: SplitHandles) -> str:
    # ε has no first bit and is not of the form 0x, so it lands on "0"
    return optp_max(path_outputs_g(z, h))


def compose_gf(x: str, h: SplitHandles) -> str:
    return g(f(x, h), h)
