"""Command-line entry point for the splitting laboratory."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from deciders import decode_cnf, encode_cnf, parse_dimacs, sat_brute
from libs.common.errors import ConfigError, LadderError
from libs.common.formatters import format_verdict, highlight
from libs.common.parsers import parse_bits, parse_bounds
from plugins.optp import compose_gf, f, split_handles
from services.reporting import SUITES, SuiteReport, export_trace, run_suite
from services.splitter import EngineConfig, extend_to, member_D, member_part, parse_part, r

from .app import TableSession, default_cache_path, load_config


class LadderGroup(click.Group):
    """Report domain errors as a JSON object and exit with status 2."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except LadderError as exc:
            click.echo(json.dumps({"error": str(exc)}))
            ctx.exit(2)


class AppState:
    def __init__(
        self,
        config_path: str | None,
        cache: str | None,
        no_cache: bool,
        enumeration: str | None,
        roster_file: str | None,
    ) -> None:
        self.config_path = config_path
        self.cache = cache
        self.no_cache = no_cache
        self.enumeration = enumeration
        self.roster_file = roster_file
        self._config: EngineConfig | None = None

    @property
    def config(self) -> EngineConfig:
        if self._config is None:
            self._config = load_config(self.config_path, self.enumeration, self.roster_file)
        return self._config

    def session(self) -> TableSession:
        if self.no_cache:
            path = None
        elif self.cache is not None:
            path = Path(self.cache)
        else:
            path = default_cache_path(self.config)
        return TableSession(self.config, path)


def _bits(ctx: click.Context, param: click.Parameter, value: str | None) -> str | None:
    if value is None:
        return None
    try:
        return parse_bits(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from exc


def _truth(value: bool) -> str:
    return "true" if value else "false"


def _print_report(report: SuiteReport) -> None:
    click.echo(highlight(f"suite {report.name} [{report.fingerprint}]"))
    for check in report.checks:
        click.echo(f"  {format_verdict(check.passed)} {check.description}")
        if check.counterexample:
            click.echo(f"       counterexample: {check.counterexample}")
    status = "passed" if report.passed else "FAILED"
    click.echo(f"{report.name}: {status} in {report.wall_time:.2f}s")


@click.group(cls=LadderGroup)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="Flat key = value engine config.")
@click.option("--cache", type=click.Path(dir_okay=False), help="r-table cache file.")
@click.option("--no-cache", is_flag=True, help="Do not read or write an r-table cache.")
@click.option("--enumeration", type=click.Choice(["goedel", "roster"]), help="Override the enumeration mode.")
@click.option("--roster-file", type=click.Path(dir_okay=False), help="Roster of machine files.")
@click.pass_context
def cli(
    ctx: click.Context,
    config_path: str | None,
    cache: str | None,
    no_cache: bool,
    enumeration: str | None,
    roster_file: str | None,
) -> None:
    """Split an NP-complete set by delayed team diagonalization, at desk scale."""
    ctx.obj = AppState(config_path, cache, no_cache, enumeration, roster_file)


@cli.command("r")
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.pass_obj
def r_command(state: AppState, n: int) -> None:
    """Print r(n)."""
    session = state.session()
    click.echo(r(n, state.config, session.table))
    session.save()


@cli.command()
@click.option("--part", required=True, help="A, B, C, ... or a residue.")
@click.option("--x", "x", required=True, callback=_bits)
@click.pass_obj
def member(state: AppState, part: str, x: str) -> None:
    """Decide membership of x in one part of S."""
    config = state.config
    session = state.session()
    click.echo(_truth(member_part(x, parse_part(part, config.k), config, session.table)))
    session.save()


@cli.command("member-d")
@click.option("--x", "x", required=True, callback=_bits)
@click.pass_obj
def member_d(state: AppState, x: str) -> None:
    """Decide membership of x in the separator D."""
    session = state.session()
    click.echo(_truth(member_D(x, state.config, session.table)))
    session.save()


@cli.command()
@click.option("--upto", type=click.IntRange(min=2), required=True)
@click.option("--only-advanced", is_flag=True, help="Keep only the steps where r advanced.")
@click.option("--format", "fmt", type=click.Choice(["text", "csv"]), default="text", show_default=True)
@click.pass_obj
def trace(state: AppState, upto: int, only_advanced: bool, fmt: str) -> None:
    """Print the r table and its diagonalization events up to n = UPTO."""
    session = state.session()
    extend_to(session.table, upto)
    session.save()
    data = export_trace(session.table.truncated(upto), fmt, only_advanced)  # type: ignore[arg-type]
    click.echo(data.decode("utf-8"), nl=False)


@cli.command()
@click.option("--x", "x", required=True, callback=_bits)
@click.pass_obj
def compose(state: AppState, x: str) -> None:
    """Print f(x), g(f(x)) and chi_S(x)."""
    session = state.session()
    h = split_handles(state.config, session.table)
    click.echo(f"f(x) = {f(x, h) or 'ε'}")
    click.echo(f"g(f(x)) = {compose_gf(x, h)}")
    click.echo(f"chi_S(x) = {int(h.chi_S(x))}")
    session.save()


@cli.command("compose-verify")
@click.option("--maxlen", type=click.IntRange(min=0), default=10, show_default=True)
@click.pass_obj
def compose_verify(state: AppState, maxlen: int) -> None:
    """Check g(f(x)) = chi_S(x) for every |x| <= MAXLEN."""
    report = run_suite("compose", state.config, {"maxlen": maxlen})
    _print_report(report)
    sys.exit(0 if report.passed else 1)


def _bound(ctx: click.Context, param: click.Parameter, values: tuple[str, ...]) -> dict[str, int]:
    try:
        return parse_bounds(values)
    except ConfigError as exc:
        raise click.BadParameter(str(exc)) from exc


@cli.command()
@click.option("--suite", "suite_name", type=click.Choice(sorted(SUITES)), required=True)
@click.option("--bound", "bounds", multiple=True, callback=_bound, help="Scan limit override, e.g. maxlen=8.")
@click.pass_obj
def verify(state: AppState, suite_name: str, bounds: dict[str, int]) -> None:
    """Run one verification suite; exit status 1 when any check fails."""
    report = run_suite(suite_name, state.config, bounds)
    _print_report(report)
    sys.exit(0 if report.passed else 1)


@cli.command("encode-cnf")
def encode_cnf_command() -> None:
    """Read a DIMACS-like clause list on stdin and print its codeword."""
    try:
        formula = parse_dimacs(click.get_text_stream("stdin").read())
    except ValueError as exc:
        click.echo(json.dumps({"error": str(exc)}))
        sys.exit(2)
    click.echo(encode_cnf(formula))


@cli.command()
@click.option("--y", "y", required=True, callback=_bits)
def sat(y: str) -> None:
    """Decide y ∈ SAT by brute force."""
    click.echo(_truth(sat_brute(y)))


@cli.command()
@click.option("--y", "y", required=True, callback=_bits)
def decode(y: str) -> None:
    """Decode y into a CNF formula."""
    formula = decode_cnf(y)
    if formula is None:
        click.echo("absent")
        return
    click.echo(f"{formula.variable_count} variables: {formula}")


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
