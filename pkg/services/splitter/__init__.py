"""The splitting function r, the parts of S and the separator D."""

from .cache import load_table, parse_table, render_table, save_table
from .config import DEPTH_FUNCTIONS, DepthFunction, EngineConfig, depth_function
from .engine import attempt_length, check_witness, eq1_gate, eq1_gate_direct, extend, extend_to, oracle_answer, r
from .membership import length_part, member_A, member_B, member_D, member_part, parse_part, part_name
from .table import DiagEvent, RTable

__all__ = [
    "DEPTH_FUNCTIONS",
    "DepthFunction",
    "DiagEvent",
    "EngineConfig",
    "RTable",
    "attempt_length",
    "check_witness",
    "depth_function",
    "eq1_gate",
    "eq1_gate_direct",
    "extend",
    "extend_to",
    "length_part",
    "load_table",
    "member_A",
    "member_B",
    "member_D",
    "member_part",
    "oracle_answer",
    "parse_part",
    "parse_table",
    "part_name",
    "r",
    "render_table",
    "save_table",
]
