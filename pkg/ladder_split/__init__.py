"""Runnable entry point: config loading, the r-table cache and the ``ladder`` CLI."""

from .app import TableSession, build_config, cache_dir, default_cache_path, load_config

__all__ = ["TableSession", "build_config", "cache_dir", "default_cache_path", "load_config"]
