"""Shared libraries for the splitting laboratory."""

from .bitstrings import ceil_log2, floor_log2, length_lex, length_lex_key, strings_up_to
from .errors import CircularityError, ConfigError, LadderError, MalformedMachineError
from .formatters import format_verdict, highlight
from .logs import log
from .parsers import parse_bits, parse_bounds, parse_key_values

__all__ = [
    "CircularityError",
    "ConfigError",
    "LadderError",
    "MalformedMachineError",
    "ceil_log2",
    "floor_log2",
    "format_verdict",
    "highlight",
    "length_lex",
    "length_lex_key",
    "log",
    "parse_bits",
    "parse_bounds",
    "parse_key_values",
    "strings_up_to",
]
