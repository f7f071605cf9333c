"""Verification suites over the construction's checkable mechanics.

Each suite scans a bounded region exhaustively and records one :class:`Check`
per property. A failing check always names a counterexample or a diagnostic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Mapping, TypeVar

from deciders import decode_cnf, sat_brute, sat_brute_work, sat_dpll
from libs.common.bitstrings import length_lex
from libs.common.errors import ConfigError
from libs.common.logs import log
from machines import DUMMY, GOEDEL, EnumerationMode, goedel_index, index_to_machine, indices_of_program, universal_run
from machines.fixtures import always_accept, copier, dummy_rejector
from plugins.optp import compose_gf, f, g, split_handles
from services.splitter import (
    EngineConfig,
    RTable,
    attempt_length,
    check_witness,
    eq1_gate,
    eq1_gate_direct,
    extend,
    extend_to,
    member_D,
    member_part,
    oracle_answer,
    parse_table,
    part_name,
    render_table,
)

DEFAULT_BOUNDS: dict[str, int] = {
    "maxlen": 10,
    "n": 100_000,
    "gate_i": 10_000,
    "gate_r": 40,
    "sat_len": 16,
    "kway_maxlen": 8,
    "kway_n": 4096,
    "k": 3,
    "upto": 1 << 16,
    "enum_scan": 50,
}

# largest exponent the gate oracle is willing to materialize as 2**exponent
DIRECT_EXPONENT_LIMIT = 1 << 16

T = TypeVar("T")


@dataclass(frozen=True)
class Check:
    description: str
    passed: bool
    counterexample: str | None = None


@dataclass
class SuiteReport:
    name: str
    fingerprint: str
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, description: str, passed: bool, counterexample: str | None = None) -> None:
        if not passed and not counterexample:
            counterexample = "no counterexample recorded"
        self.checks.append(Check(description, passed, None if passed else counterexample))

    def note(self, description: str) -> None:
        self.checks.append(Check(description, True))


def _first(items: Iterable[T], predicate: Callable[[T], bool]) -> T | None:
    return next((item for item in items if predicate(item)), None)


# -------------------------
# Partition and separator
# -------------------------
def _partition(report: SuiteReport, config: EngineConfig, max_length: int) -> None:
    table = extend_to(RTable.fresh(config), max(max_length, 2))
    overlap: str | None = None
    union_miss: str | None = None
    xor_miss: str | None = None
    parts_by_length: dict[int, set[int]] = {}
    for x in length_lex(max_length):
        in_s = config.s_decider.decide(x)
        parts = [p for p in range(config.k) if member_part(x, p, config, table)]
        if len(parts) > 1 and overlap is None:
            overlap = f"x={x!r} lies in parts {parts}"
        if bool(parts) != in_s and union_miss is None:
            union_miss = f"x={x!r}: in S={in_s}, parts={parts}"
        if (len(parts) % 2 == 1) != in_s and xor_miss is None:
            xor_miss = f"x={x!r}: in S={in_s}, parts={parts}"
        if parts:
            parts_by_length.setdefault(len(x), set()).update(parts)
    shared = {length: sorted(parts) for length, parts in parts_by_length.items() if len(parts) > 1}
    report.check(f"parts pairwise disjoint on |x| <= {max_length}", overlap is None, overlap)
    report.check(f"union of parts equals S on |x| <= {max_length}", union_miss is None, union_miss)
    report.check("symmetric difference of parts equals S", xor_miss is None, xor_miss)
    report.check("strongly disjoint: each length feeds at most one part", not shared, f"lengths with several parts: {shared}")


def suite_partition(config: EngineConfig, bounds: Mapping[str, int]) -> SuiteReport:
    report = SuiteReport("partition", config.fingerprint)
    _partition(report, config, bounds["maxlen"])
    return report


def suite_separator(config: EngineConfig, bounds: Mapping[str, int]) -> SuiteReport:
    report = SuiteReport("separator", config.fingerprint)
    if config.k != 2:
        raise ConfigError("the separator suite needs k = 2")
    max_length = bounds["maxlen"]
    table = extend_to(RTable.fresh(config), max(max_length, 2))
    a_outside = b_inside = None
    d_by_length: dict[int, set[bool]] = {}
    for x in length_lex(max_length):
        in_d = member_D(x, config, table)
        d_by_length.setdefault(len(x), set()).add(in_d)
        if a_outside is None and member_part(x, 0, config, table) and not in_d:
            a_outside = f"x={x!r} in A but not in D"
        if b_inside is None and member_part(x, 1, config, table) and in_d:
            b_inside = f"x={x!r} in B and in D"
    mixed = [length for length, seen in d_by_length.items() if len(seen) > 1]
    report.check("A ⊆ D", a_outside is None, a_outside)
    report.check("B ∩ D = ∅", b_inside is None, b_inside)
    report.check("D depends on |x| only", not mixed, f"lengths with mixed D membership: {mixed}")
    return report


# -------------------------
# r table laws and bounds
# -------------------------
def suite_rtable(config: EngineConfig, bounds: Mapping[str, int]) -> SuiteReport:
    report = SuiteReport("rtable", config.fingerprint)
    n = bounds["n"]
    scratch = extend_to(RTable.fresh(config), n)
    values = scratch.values
    start = config.start_r
    report.check(f"r(0) = r(1) = r(2) = {start}", values[:3] == [start] * 3, f"initial values {values[:3]}")
    bad_step = _first(range(1, len(values)), lambda i: values[i] - values[i - 1] not in (0, 1))
    report.check(
        f"r nondecreasing with steps in {{0, 1}} up to n = {n}",
        bad_step is None,
        None if bad_step is None else f"r({bad_step - 1}) = {values[bad_step - 1]}, r({bad_step}) = {values[bad_step]}",
    )
    replay = extend_to(RTable.fresh(config), n)
    report.check("replay from scratch is identical", replay.values == values and replay.events == scratch.events,
                 "values or events differ between two runs")

    text = render_table(scratch)
    reloaded = parse_table(text, config)
    report.check("text cache round-trips", reloaded.values == values and reloaded.events == scratch.events,
                 "reloaded table differs")
    resumed = extend_to(parse_table(render_table(scratch.truncated(n // 2)), config), n)
    report.check(
        "extension from a half-length cache is bit-identical",
        render_table(resumed) == text,
        "resumed table renders differently",
    )
    report.note(f"r({n}) = {values[n]}; {sum(e.advanced for e in scratch.events)} advancing steps")
    return report


def suite_noncircular(config: EngineConfig, bounds: Mapping[str, int]) -> SuiteReport:
    report = SuiteReport("noncircular", config.fingerprint)
    table = extend_to(RTable.fresh(config), bounds["n"])
    violations: dict[str, str] = {}

    def flag(label: str, message: str) -> None:
        violations.setdefault(label, message)

    passed_gate = 0
    for e in table.events:
        clock = e.depth**e.target_index + e.target_index
        if not e.gate_failed:
            passed_gate += 1
            if e.max_query_length >= e.i:
                flag("circular", f"i={e.i}: query length {e.max_query_length}")
        if e.max_query_length > clock:
            flag("clock", f"i={e.i}: query length {e.max_query_length} > {clock}")
        if e.strings_examined > 2 ** (e.depth + 1) - 1:
            flag("search", f"i={e.i}: examined {e.strings_examined} at depth {e.depth}")
        if e.gate_failed and (e.witness is not None or e.strings_examined):
            flag("gate", f"i={e.i}: gate failed yet searched")
        if e.advanced and (e.gate_failed or e.witness is None):
            flag("advance", f"i={e.i}: advanced without a witness")
        if e.gate_failed != eq1_gate(e.i, e.r_i, config):
            flag("replay", f"i={e.i}: recorded gate {e.gate_failed} disagrees with recomputation")
    report.check("max_query_length < i whenever the gate passed", "circular" not in violations, violations.get("circular"))
    report.check("max_query_length <= depth^j + j", "clock" not in violations, violations.get("clock"))
    report.check("strings_examined <= 2^(depth+1) - 1", "search" not in violations, violations.get("search"))
    report.check("gate failure means no search", "gate" not in violations, violations.get("gate"))
    report.check("advancing steps carry a witness", "advance" not in violations, violations.get("advance"))
    report.check("recorded gate outcomes replay", "replay" not in violations, violations.get("replay"))
    report.note(f"gate passed at {passed_gate} of {len(table.events)} steps")
    return report


def suite_gate_oracle(config: EngineConfig, bounds: Mapping[str, int]) -> SuiteReport:
    report = SuiteReport("gate-oracle", config.fingerprint)
    exponent_of = getattr(config.s_decider.cost_fn, "log2", None)
    mismatch: str | None = None
    direct = skipped = 0
    for i in range(2, bounds["gate_i"] + 1):
        for r_i in range(bounds["gate_r"] + 1):
            fast = eq1_gate(i, r_i, config)
            t = attempt_length(i, r_i, config)
            if exponent_of is not None and exponent_of(t) > DIRECT_EXPONENT_LIMIT:
                # 2^(T^c) ≥ 2^65536 > i, so the gate must fail
                skipped += 1
                slow = True
            else:
                direct += 1
                slow = eq1_gate_direct(i, r_i, config)
            if fast != slow and mismatch is None:
                mismatch = f"i={i}, r_i={r_i}, T={t}: exponent-domain {fast}, direct {slow}"
    report.check("exponent-domain gate matches direct evaluation", mismatch is None, mismatch)
    report.note(f"{direct} pairs evaluated directly, {skipped} beyond 2^{DIRECT_EXPONENT_LIMIT}")
    return report


# -------------------------
# Composition, enumeration, k-way, observability, SAT
# -------------------------
def suite_compose(config: EngineConfig, bounds: Mapping[str, int]) -> SuiteReport:
    report = SuiteReport("compose", config.fingerprint)
    if config.k != 2:
        raise ConfigError("the compose suite needs k = 2")
    max_length = bounds["maxlen"]
    table = extend_to(RTable.fresh(config), max_length + 1)
    h = split_handles(config, table)
    identity = length_law = one_bit = constant_on_a = None
    for x in length_lex(max_length):
        fx = f(x, h)
        gfx = compose_gf(x, h)
        if identity is None and (gfx == "1") != config.s_decider.decide(x):
            identity = f"x={x!r}: g(f(x)) = {gfx}"
        if length_law is None and len(fx) != len(x) + 1:
            length_law = f"x={x!r}: f(x) = {fx!r}"
        if one_bit is None and len(gfx) != 1:
            one_bit = f"x={x!r}: g output {gfx!r}"
        if constant_on_a is None and h.member_A(x) and (fx != "1" * (len(x) + 1) or gfx != "1"):
            constant_on_a = f"x={x!r} in A: f(x) = {fx!r}, g(f(x)) = {gfx}"
    report.check(f"g(f(x)) = 1 iff x in S on |x| <= {max_length}", identity is None, identity)
    report.check("|f(x)| = |x| + 1", length_law is None, length_law)
    report.check("g outputs exactly one bit", one_bit is None, one_bit)
    report.check("g∘f is 1 on A through the all-ones branch", constant_on_a is None, constant_on_a)
    report.check("g(ε) = 0", g("", h) == "0", f"g(ε) = {g('', h)!r}")
    return report


def suite_enumeration(config: EngineConfig, bounds: Mapping[str, int]) -> SuiteReport:
    report = SuiteReport("enumeration", config.fingerprint)
    fixtures = {"dummy rejector": dummy_rejector(), "always accept": always_accept(), "copier": copier()}
    for name, program in fixtures.items():
        limit = bounds["enum_scan"] if program == DUMMY else goedel_index(program, 1)
        found = indices_of_program(program, limit, GOEDEL)
        report.check(
            f"{name}: >= 2 goedel indices within {limit if limit < 10**6 else 'π(code, 1)'}",
            len(found) >= 2 and len(set(found)) == len(found),
            f"found {found}",
        )
        wrong = _first(found, lambda j: index_to_machine(j, GOEDEL).program != program)
        report.check(f"{name}: every found index decodes back", wrong is None, f"index {wrong}")
    clock_break = None
    roster = EnumerationMode("roster", tuple(fixtures.values()))
    for j in range(1, 7):
        for x in length_lex(3):
            outcome = universal_run(j, x, lambda q: q == x, roster)
            if outcome.steps_used > len(x) ** j + j and clock_break is None:
                clock_break = f"j={j}, x={x!r}: {outcome.steps_used} steps"
    report.check("simulations stay within |x|^j + j", clock_break is None, clock_break)
    return report


def suite_kway(config: EngineConfig, bounds: Mapping[str, int]) -> SuiteReport:
    k = bounds["k"]
    cfg = config if config.k == k else replace(config, k=k, initial_r=None)
    report = SuiteReport("kway", cfg.fingerprint)
    _partition(report, cfg, bounds["kway_maxlen"])
    table = extend_to(RTable.fresh(cfg), max(bounds["kway_n"], bounds["kway_maxlen"]))
    rule_break = _first(
        table.events,
        lambda e: e.target_index != e.r_i // k or e.oracle_part != (e.r_i + 1) % k or e.oracle_part == e.r_i % k,
    )
    report.check("every step targets ⌊r/k⌋ against part (r+1) mod k ≠ r mod k", rule_break is None, f"{rule_break}")

    logged: dict[int, set[tuple[int, int]]] = {}
    for e in table.events:
        logged.setdefault(e.r_i, set()).add((e.target_index, e.oracle_part))
    block_break = None
    for target in sorted({r_value // k for r_value in logged}):
        block = range(target * k, target * k + k)
        if not all(r_value in logged for r_value in block):
            continue
        pairs: set[tuple[int, int]] = set().union(*(logged[r_value] for r_value in block))
        if {t for t, _ in pairs} != {target} or {part for _, part in pairs} != set(range(k)):
            block_break = f"block of target {target}: {sorted(pairs)}"
            break
    report.check("each logged block of k r values pairs one target with every part once", block_break is None, block_break)

    attempted: dict[int, set[int]] = {}
    tried_r: set[int] = set()
    for e in table.events:
        if not e.gate_failed:
            attempted.setdefault(e.target_index, set()).add(e.oracle_part)
            tried_r.add(e.r_i)
    completed = {
        target: parts for target, parts in attempted.items() if all(target * k + d in tried_r for d in range(k))
    }
    short = {target: sorted(parts) for target, parts in completed.items() if parts != set(range(k))}
    report.check("completed blocks in the event log cover every part", not short, f"targets with missing parts: {short}")
    report.note(f"{len(completed)} completed blocks in the event log, r reached {max(table.values)}")
    return report


def suite_observability(config: EngineConfig, bounds: Mapping[str, int]) -> SuiteReport:
    report = SuiteReport("observability", config.fingerprint)
    upto = bounds["upto"]
    table = RTable.fresh(config)
    event = None
    while table.last_index < upto:
        candidate = extend(table)
        if candidate.advanced:
            event = candidate
            break
    report.check(f"an advancing step occurs with i <= {upto}", event is not None, f"r stayed {table.values[-1]} up to i = {table.last_index}")
    if event is None or event.witness is None:
        return report
    y, i, j, part = event.witness, event.i, event.target_index, event.oracle_part

    def oracle(q: str) -> bool:
        return oracle_answer(part, q, table)

    accepted = universal_run(j, y, oracle, config.enumeration_mode).accepted
    in_sat = sat_brute(y)
    report.check(f"witness {y!r} at i = {i}: SAT and M_{j}^{part_name(part)} disagree", in_sat != accepted, f"sat={in_sat}, accepts={accepted}")
    first = _first(length_lex(event.depth), lambda cand: check_witness(cand, i, j, part, table))
    report.check("witness is the length-lex first disagreement", first == y, f"first disagreement is {first!r}")
    if index_to_machine(j, config.enumeration_mode).program == DUMMY:
        least = _first(length_lex(event.depth), lambda cand: decode_cnf(cand) is not None and sat_brute(cand))
        report.check("against a rejector the witness is the least satisfiable codeword", least == y, f"least is {least!r}")
    report.note(f"mode={config.enumeration_mode.kind}, depth_fn={config.depth_fn.name}, depth={event.depth}")
    return report


def suite_sat_oracle(config: EngineConfig, bounds: Mapping[str, int]) -> SuiteReport:
    report = SuiteReport("sat-oracle", config.fingerprint)
    max_length = bounds["sat_len"]
    cost_fn = config.s_decider.cost_fn
    disagreement = over_budget = None
    decodable = 0
    for y in length_lex(max_length):
        if decode_cnf(y) is not None:
            decodable += 1
            if disagreement is None and sat_brute(y) != sat_dpll(y):
                disagreement = f"y={y!r}"
        if over_budget is None and sat_brute_work(y) > cost_fn(len(y)):
            over_budget = f"y={y!r}: work {sat_brute_work(y)} > cost {cost_fn(len(y))}"
    report.check(f"brute force agrees with DPLL on |y| <= {max_length}", disagreement is None, disagreement)
    report.check("measured work stays within cost_fn(|y|)", over_budget is None, over_budget)
    report.note(f"{decodable} decodable codewords checked")
    return report


SUITES: dict[str, Callable[[EngineConfig, Mapping[str, int]], SuiteReport]] = {
    "partition": suite_partition,
    "separator": suite_separator,
    "rtable": suite_rtable,
    "noncircular": suite_noncircular,
    "gate-oracle": suite_gate_oracle,
    "compose": suite_compose,
    "enumeration": suite_enumeration,
    "kway": suite_kway,
    "observability": suite_observability,
    "sat-oracle": suite_sat_oracle,
}


def run_suite(name: str, config: EngineConfig, bounds: Mapping[str, int] | None = None) -> SuiteReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ConfigError(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None
    unknown = sorted(set(bounds or {}) - set(DEFAULT_BOUNDS))
    if unknown:
        raise ConfigError(f"unknown bound {unknown[0]!r}")
    merged = {**DEFAULT_BOUNDS, **(bounds or {})}
    started = time.perf_counter()
    report = suite(config, merged)
    report.wall_time = time.perf_counter() - started
    log(f"suite {name} [{report.fingerprint}] {'passed' if report.passed else 'FAILED'} in {report.wall_time:.2f}s")
    return report
