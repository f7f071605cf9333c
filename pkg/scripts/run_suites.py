#!/usr/bin/env python3
"""
Run the verification suites for one engine config and print a JSON summary.

Usage:
  python3 scripts/run_suites.py [--config path.conf] [--suite NAME ...] [--bound key=N ...]

Without --suite every suite that applies to the config runs: separator and
compose only when k = 2, observability only when asked for by name.

Output JSON shape:

{
  "fingerprint": "3f2a...",
  "suites": {
    "rtable": {"passed": true, "wall_time": 0.41, "checks": [{"description": ..., "passed": true}, ...]},
    ...
  },
  "passed": true
}

Exit status is 0 when every check passed, 1 otherwise, 2 on a config error.
"""
from __future__ import annotations

import json
import sys
from typing import Any, Dict, List, Tuple

import click

from ladder_split.app import load_config
from libs.common.errors import LadderError
from libs.common.parsers import parse_bounds
from services.reporting import SUITES, SuiteReport, run_suite
from services.splitter import EngineConfig

ALWAYS = ("partition", "rtable", "noncircular", "gate-oracle", "enumeration", "kway", "sat-oracle")
TWO_WAY = ("separator", "compose")


def default_suites(config: EngineConfig) -> List[str]:
    names = list(ALWAYS)
    if config.k == 2:
        names.extend(TWO_WAY)
    return names


def report_entry(report: SuiteReport) -> Dict[str, Any]:
    checks = []
    for check in report.checks:
        entry: Dict[str, Any] = {"description": check.description, "passed": check.passed}
        if check.counterexample:
            entry["counterexample"] = check.counterexample
        checks.append(entry)
    return {"passed": report.passed, "wall_time": round(report.wall_time, 3), "checks": checks}


@click.command()
@click.option("--config", "config_path", type=click.Path(dir_okay=False))
@click.option("--suite", "suites", multiple=True, type=click.Choice(sorted(SUITES)))
@click.option("--bound", "bound_values", multiple=True)
def main(config_path: str | None, suites: Tuple[str, ...], bound_values: Tuple[str, ...]) -> None:
    try:
        config = load_config(config_path)
        bounds = parse_bounds(bound_values)
        names = list(suites) or default_suites(config)
        reports = [run_suite(name, config, bounds) for name in names]
    except LadderError as exc:
        click.echo(json.dumps({"error": str(exc)}))
        sys.exit(2)
    out = {
        "fingerprint": config.fingerprint,
        "suites": {report.name: report_entry(report) for report in reports},
        "passed": all(report.passed for report in reports),
    }
    click.echo(json.dumps(out, indent=2))
    sys.exit(0 if out["passed"] else 1)


if __name__ == "__main__":
    main()
