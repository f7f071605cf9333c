"""The SAT decider behind the witness test and the pluggable S deciders."""

from .cnf import CnfFormula, Literal, decode_cnf, encode_cnf, formula, parse_dimacs
from .sat import dpll_satisfiable, sat_brute, sat_brute_work, sat_dpll
from .sdecider import ExponentialCost, SDecider, make_sat_sdecider, make_sdecider

__all__ = [
    "CnfFormula",
    "ExponentialCost",
    "Literal",
    "SDecider",
    "decode_cnf",
    "dpll_satisfiable",
    "encode_cnf",
    "formula",
    "make_sat_sdecider",
    "make_sdecider",
    "parse_dimacs",
    "sat_brute",
    "sat_brute_work",
    "sat_dpll",
]
