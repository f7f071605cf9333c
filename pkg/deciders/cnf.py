"""CNF formulas and their uniquely decodable bitstring encoding.

Layout of a codeword:

* the variable count n ≥ 1 as n-1 ones followed by a zero;
* one or more clauses, each a nonempty run of literals ``1 s idx`` closed by
  a ``0``. ``s`` is 0 for a positive and 1 for a negated literal; ``idx`` is
  the variable index in exactly bitlength(n-1) bits (no bits when n = 1);
* nothing after the last clause.

Every bitstring either decodes to exactly one formula or to nothing, so every
string is classifiable. The code is not prefix-free: the clause list ends
where the string ends, so ``0100`` = (v0) is a prefix of ``0100100`` =
(v0) ∧ (v0). A codeword can only be read as a whole string, never out of a
longer stream. The shortest codewords are ``0100`` = (v0) and ``0110`` =
(¬v0); in particular ε and ``1`` decode to nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Literal(NamedTuple):
    variable: int
    positive: bool = True

    def __str__(self) -> str:
        return f"v{self.variable}" if self.positive else f"¬v{self.variable}"


Clause = tuple[Literal, ...]


@dataclass(frozen=True)
class CnfFormula:
    variable_count: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        if self.variable_count < 1:
            raise ValueError("a formula needs at least one variable")
        for clause in self.clauses:
            if not clause:
                raise ValueError("clauses must be nonempty")
            for lit in clause:
                if not 0 <= lit.variable < self.variable_count:
                    raise ValueError(f"literal {lit} outside {self.variable_count} variables")

    def __str__(self) -> str:
        return " ∧ ".join("(" + " ∨ ".join(map(str, clause)) + ")" for clause in self.clauses)


def formula(variable_count: int, *clauses: Iterable[int | tuple[int, bool]]) -> CnfFormula:
    """Build a formula from clauses of signed DIMACS-style ints or (variable, positive) pairs.

    Signed ints are 1-based: ``formula(2, [1, 2], [-1])`` is (v0 ∨ v1) ∧ (¬v0).
    """
    built: list[Clause] = []
    for clause in clauses:
        lits: list[Literal] = []
        for item in clause:
            if isinstance(item, tuple):
                lits.append(Literal(item[0], item[1]))
            else:
                lits.append(Literal(abs(item) - 1, item > 0))
        built.append(tuple(lits))
    return CnfFormula(variable_count, tuple(built))


def _index_width(variable_count: int) -> int:
    return (variable_count - 1).bit_length()


def encode_cnf(f: CnfFormula) -> str:
    if not f.clauses:
        raise ValueError("the encoding needs at least one clause")
    width = _index_width(f.variable_count)
    parts = ["1" * (f.variable_count - 1), "0"]
    for clause in f.clauses:
        for lit in clause:
            parts.append("1")
            parts.append("0" if lit.positive else "1")
            if width:
                parts.append(format(lit.variable, f"0{width}b"))
        parts.append("0")
    return "".join(parts)


def decode_cnf_with_work(y: str) -> tuple[CnfFormula | None, int]:
    """Decode ``y`` and report how many bits were consumed before success or failure."""
    pos = 0
    n = len(y)
    while pos < n and y[pos] == "1":
        pos += 1
    if pos >= n:
        return None, pos
    variable_count = pos + 1
    pos += 1
    width = _index_width(variable_count)
    clauses: list[Clause] = []
    while pos < n:
        lits: list[Literal] = []
        while True:
            if pos >= n:
                return None, pos
            marker = y[pos]
            pos += 1
            if marker == "0":
                break
            if pos + 1 + width > n:
                return None, n
            positive = y[pos] == "0"
            index = int(y[pos + 1 : pos + 1 + width], 2) if width else 0
            pos += 1 + width
            if index >= variable_count:
                return None, pos
            lits.append(Literal(index, positive))
        if not lits:
            return None, pos
        clauses.append(tuple(lits))
    if not clauses:
        return None, pos
    return CnfFormula(variable_count, tuple(clauses)), pos


def decode_cnf(y: str) -> CnfFormula | None:
    return decode_cnf_with_work(y)[0]


def parse_dimacs(text: str) -> CnfFormula:
    """Parse a DIMACS-like clause list: optional ``p cnf N M``, ``c`` comments, 0-terminated clauses."""
    declared: int | None = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            tokens = line.split()
            if len(tokens) < 3 or tokens[1] != "cnf":
                raise ValueError(f"bad problem line {line!r}")
            declared = int(tokens[2])
            continue
        for token in line.split():
            value = int(token)
            if value == 0:
                if not current:
                    raise ValueError("empty clause")
                clauses.append(current)
                current = []
            else:
                current.append(value)
    if current:
        clauses.append(current)
    if not clauses:
        raise ValueError("no clauses")
    used = max(abs(v) for clause in clauses for v in clause)
    variable_count = declared if declared is not None else used
    if used > variable_count:
        raise ValueError(f"variable {used} exceeds declared count {variable_count}")
    return formula(variable_count, *clauses)
