"""Verification suites and trace export."""

from .export import export_trace, import_trace
from .suites import DEFAULT_BOUNDS, SUITES, Check, SuiteReport, run_suite

__all__ = ["DEFAULT_BOUNDS", "SUITES", "Check", "SuiteReport", "export_trace", "import_trace", "run_suite"]
