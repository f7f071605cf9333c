"""Brute-force SAT over the bitstring encoding, plus an independent DPLL checker."""

from __future__ import annotations

from itertools import product

from .cnf import CnfFormula, decode_cnf, decode_cnf_with_work


def _brute(f: CnfFormula) -> tuple[bool, int]:
    work = 0
    for assignment in product((False, True), repeat=f.variable_count):
        satisfied = True
        for clause in f.clauses:
            clause_true = False
            for lit in clause:
                work += 1
                if assignment[lit.variable] == lit.positive:
                    clause_true = True
                    break
            if not clause_true:
                satisfied = False
                break
        if satisfied:
            return True, work
    return False, work


def sat_brute(y: str) -> bool:
    """True iff y encodes a formula satisfied by some assignment (exhaustive search)."""
    f = decode_cnf(y)
    return f is not None and _brute(f)[0]


def sat_brute_work(y: str) -> int:
    """Work spent by :func:`sat_brute`: bits decoded plus literal evaluations."""
    f, decoded = decode_cnf_with_work(y)
    if f is None:
        return decoded
    return decoded + _brute(f)[1]


# DPLL over lists of signed 1-based ints, kept apart from the brute-force path.


def _force(cnf: list[list[int]], lit: int) -> list[list[int]]:
    out = []
    for clause in cnf:
        if lit in clause:
            continue
        out.append([l for l in clause if l != -lit])
    return out


def _unit_propagate(cnf: list[list[int]]) -> list[list[int]]:
    while True:
        unit = next((clause[0] for clause in cnf if len(clause) == 1), None)
        if unit is None:
            return cnf
        cnf = _force(cnf, unit)


def _dpll(cnf: list[list[int]]) -> bool:
    cnf = _unit_propagate(cnf)
    if not cnf:
        return True
    if any(not clause for clause in cnf):
        return False
    v = min(abs(l) for clause in cnf for l in clause)
    return _dpll(_force(cnf, v)) or _dpll(_force(cnf, -v))


def dpll_satisfiable(f: CnfFormula) -> bool:
    cnf = [[(lit.variable + 1) * (1 if lit.positive else -1) for lit in clause] for clause in f.clauses]
    return _dpll(cnf)


def sat_dpll(y: str) -> bool:
    f = decode_cnf(y)
    return f is not None and dpll_satisfiable(f)
