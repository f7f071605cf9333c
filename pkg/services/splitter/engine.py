"""Computation of the splitting function r by team diagonalization.

For i ≥ 2 the value r(i+1) is derived from r(0..i). The target machine is
M_j with j = ⌊r(i)/k⌋ and the frozen oracle is the part (r(i)+1) mod k of S;
with k = 2 an even r(i) diagonalizes against oracle B and an odd one against
oracle A. The step is skipped outright (r stays) when the gate says the
budget of the attempt reaches i; otherwise every y with |y| ≤ depth_fn(i) is
tried in length-lexicographic order and the first y on which SAT and the
clocked machine disagree advances r by one.

The gate is evaluated in the exponent domain: 2^a ≥ i iff a ≥ ⌈log2 i⌉.
"""

from __future__ import annotations

from deciders import sat_brute
from libs.common.bitstrings import ceil_log2, length_lex
from libs.common.errors import CircularityError
from libs.common.logs import log
from machines import RunOutcome, universal_run

from .config import EngineConfig
from .table import DiagEvent, RTable


def attempt_length(i: int, r_i: int, config: EngineConfig) -> int:
    """T = depth_fn(i)^j + j, the clock of the target machine on the longest candidate."""
    j = r_i // config.k
    return config.depth_fn(i) ** j + j


def eq1_gate(i: int, r_i: int, config: EngineConfig) -> bool:
    """True when the diagonalization attempt at step i must fail (cost_fn(T) ≥ i)."""
    if i < 2:
        raise ValueError(f"the gate is defined for i >= 2, got {i}")
    t = attempt_length(i, r_i, config)
    cost_fn = config.s_decider.cost_fn
    exponent = getattr(cost_fn, "log2", None)
    if exponent is not None:
        return exponent(t) >= ceil_log2(i)
    return cost_fn(t) >= i


def eq1_gate_direct(i: int, r_i: int, config: EngineConfig) -> bool:
    """The gate evaluated by materializing cost_fn(T); only usable while T^c stays small."""
    return config.s_decider.cost_fn(attempt_length(i, r_i, config)) >= i


def oracle_answer(part: int, q: str, table: RTable) -> bool:
    """Membership of q in part ``part`` of S: q ∈ S and r(|q|) ≡ part (mod k)."""
    if not table.determined(len(q)):
        raise CircularityError(
            f"oracle query of length {len(q)} needs r({len(q)}) but the table ends at {table.last_index}"
        )
    if table.values[len(q)] % table.config.k != part:
        return False
    return table.config.s_decider.decide(q)


def _probe(y: str, i: int, j: int, oracle_part: int, table: RTable) -> tuple[bool, RunOutcome]:
    def oracle(q: str) -> bool:
        if len(q) >= i:
            log(f"circularity violation at i={i}: query of length {len(q)} on y={y!r}")
            raise CircularityError(f"oracle query of length {len(q)} at step i={i}")
        return oracle_answer(oracle_part, q, table)

    outcome = universal_run(j, y, oracle, table.config.enumeration_mode)
    return sat_brute(y) != outcome.accepted, outcome


def check_witness(y: str, i: int, j: int, oracle_part: int, table_so_far: RTable) -> bool:
    """y ∈ SAT ⟺ y ∉ L(M_j^part), the disagreement that certifies a diagonalization step."""
    return _probe(y, i, j, oracle_part, table_so_far)[0]


def extend(table: RTable) -> DiagEvent:
    """Compute r(i+1) for i = the table's last index and append it with its event."""
    config = table.config
    i = table.last_index
    if i < 2:
        raise ValueError("a table always holds r(0), r(1) and r(2)")
    r_i = table.values[i]
    j = r_i // config.k
    part = (r_i + 1) % config.k
    depth = config.depth_fn(i)

    if eq1_gate(i, r_i, config):
        event = DiagEvent(i, r_i, j, part, depth, True, None, 0, 0, False)
    else:
        witness: str | None = None
        examined = 0
        max_query = 0
        for y in length_lex(depth):
            examined += 1
            hit, outcome = _probe(y, i, j, part, table)
            max_query = max(max_query, outcome.max_query_length)
            if hit:
                witness = y
                break
        event = DiagEvent(i, r_i, j, part, depth, False, witness, examined, max_query, witness is not None)
        if event.advanced:
            log(f"r({i + 1}) = {r_i + 1}: M_{j} against part {part} fails on y={witness!r}")

    table.values.append(r_i + 1 if event.advanced else r_i)
    table.events.append(event)
    return event


def extend_to(table: RTable, n: int) -> RTable:
    while table.last_index < n:
        extend(table)
    return table


def r(n: int, config: EngineConfig, cache: RTable | None = None) -> int:
    """r(n), extending ``cache`` in place when it was built under the same configuration."""
    if n < 0:
        raise ValueError(f"r is defined on naturals, got {n}")
    if cache is not None and cache.config.fingerprint == config.fingerprint:
        table = cache
    else:
        if cache is not None:
            log(f"refusing r-table cache built for {cache.config.fingerprint}; config is {config.fingerprint}")
        table = RTable.fresh(config)
    return extend_to(table, n).values[n]
