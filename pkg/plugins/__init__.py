"""Plugins built on top of the splitting service."""

from .optp import SplitHandles, compose_gf, f, g, optp_max, path_outputs_f, path_outputs_g, split_handles

__all__ = [
    "SplitHandles",
    "compose_gf",
    "f",
    "g",
    "optp_max",
    "path_outputs_f",
    "path_outputs_g",
    "split_handles",
]
