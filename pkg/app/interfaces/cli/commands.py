"""
Command-line interface: gen, check and verify.

Documents and reports go to standard output, diagnostics to standard
error. Exit codes: 0 success, 1 a checked property does not hold, 2 usage
or parse error.
"""
import asyncio
from typing import List, Optional, TextIO, Tuple

import click

from ... import __version__
from ...application.schemas.documents import (
    parse_edge_list,
    render_check_report,
    render_dot,
    render_edge_list,
    render_suite_json,
    render_suite_text,
)
from ...application.services.check_service import DigraphCheckService
from ...domain.exceptions import DigraphError
from ...domain.models.claims import ClaimId
from ...domain.models.digraph import Digraph
from ...domain.services.constructions import (
    darbinyan_counterexample,
    expand_at,
    reduce_pair,
    thomassen_refutation,
)
from ...infrastructure.dependencies import get_settings, get_verification_service
from ...infrastructure.logging import setup_logging

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

FAMILIES = ("darbinyan", "counterexample", "thomassen", "reduce", "expand")


def _fail_usage(ctx: click.Context, error: Exception) -> None:
    click.echo(f"error: {error}", err=True)
    ctx.exit(EXIT_USAGE)


def _parse_sizes(ctx: click.Context, param: click.Parameter, value: Optional[str]) -> Optional[List[int]]:
    if value is None:
        return None
    try:
        sizes = [int(token) for token in value.replace(",", " ").split()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated orders, got {value!r}")
    if not sizes or any(n < 1 for n in sizes):
        raise click.BadParameter(f"orders must be positive, got {value!r}")
    return sizes


@click.group()
@click.version_option(__version__, prog_name="digraph-ham")
@click.option("--log-level", default=None, help="Override DIGRAPH_LOG_LEVEL for this run.")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]):
    """Hamiltonicity toolkit for digraphs: generators, checkers and claim verification."""
    settings = get_settings()
    setup_logging(log_level or settings.LOG_LEVEL, settings.LOG_FILE, settings.LOG_JSON)


def _generate(family: str, n: Optional[int], base: Optional[Digraph], u: Optional[int], v: Optional[int], z0: int) -> Digraph:
    if family in ("darbinyan", "counterexample", "thomassen") and n is None:
        raise click.UsageError(f"family {family!r} needs an order N")
    if family in ("darbinyan", "counterexample"):
        return darbinyan_counterexample(n)
    if family == "thomassen":
        return thomassen_refutation(n).digraph

    if base is None:
        if n is None:
            raise click.UsageError(f"family {family!r} needs an order N or --input")
        base = darbinyan_counterexample(n)
    if family == "reduce":
        if u is None or v is None:
            raise click.UsageError("family 'reduce' needs --u and --v")
        return reduce_pair(base, u, v).digraph
    return expand_at(base, z0).digraph


@cli.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.argument("n", type=int, required=False)
@click.option("--input", "input_file", type=click.File("r"), default=None,
              help="Edge list to reduce/expand instead of the order-N counterexample.")
@click.option("--u", type=int, default=None, help="First merged vertex for 'reduce'.")
@click.option("--v", type=int, default=None, help="Second merged vertex for 'reduce'.")
@click.option("--z0", type=int, default=0, show_default=True, help="Vertex split by 'expand'.")
@click.option("--format", "fmt", type=click.Choice(["edgelist", "dot"]), default="edgelist", show_default=True)
@click.pass_context
def gen(ctx: click.Context, family: str, n: Optional[int], input_file: Optional[TextIO],
        u: Optional[int], v: Optional[int], z0: int, fmt: str):
    """Generate a digraph of FAMILY (order N where the family needs one)."""
    try:
        base = parse_edge_list(input_file.read()) if input_file is not None else None
        digraph = _generate(family, n, base, u, v, z0)
    except DigraphError as e:
        _fail_usage(ctx, e)
        return
    click.echo(render_dot(digraph) if fmt == "dot" else render_edge_list(digraph), nl=False)


@cli.command()
@click.argument("document", type=click.File("r"))
@click.option("--check", "-c", "checks", multiple=True, required=True,
              help="Check to run, e.g. 'hamiltonian', 'ham-path 0 2', 'k-strong:2'. Repeatable.")
@click.pass_context
def check(ctx: click.Context, document: TextIO, checks: Tuple[str, ...]):
    """Run checks against an edge-list DOCUMENT ('-' for standard input)."""
    service = DigraphCheckService()
    try:
        digraph = parse_edge_list(document.read())
        outcomes = service.run_checks(digraph, checks)
    except DigraphError as e:
        _fail_usage(ctx, e)
        return
    click.echo(render_check_report(outcomes), nl=False)
    ctx.exit(EXIT_OK if all(outcome.holds for outcome in outcomes) else EXIT_VIOLATION)


@cli.command()
@click.argument("claims", nargs=-1)
@click.option("--seed", type=click.IntRange(0, 2 ** 64 - 1), default=0, show_default=True,
              help="Seed for every random batch.")
@click.option("--sizes", callback=_parse_sizes, default=None,
              help="Comma-separated orders replacing each claim's default sizes.")
@click.option("--samples", type=click.IntRange(1), default=None,
              help="Random instances per batch (default DIGRAPH_VERIFY_SAMPLES, else each claim's own size).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--save", is_flag=True, help="Also write the JSON report under DIGRAPH_REPORTS_DIR.")
@click.option("--load", "load_name", default=None, metavar="NAME",
              help="Show a report saved under DIGRAPH_REPORTS_DIR instead of running claims.")
@click.pass_context
def verify(ctx: click.Context, claims: Tuple[str, ...], seed: int, sizes: Optional[List[int]],
           samples: Optional[int], fmt: str, save: bool, load_name: Optional[str]):
    """Verify CLAIMS (ids, or 'all' / nothing for the whole suite)."""
    service = get_verification_service()
    chosen = [] if not claims or "all" in claims else list(claims)
    if load_name is not None and (claims or save):
        raise click.UsageError("--load cannot be combined with CLAIMS or --save")
    try:
        if load_name is not None:
            report = asyncio.run(service.load_report(load_name))
        else:
            report = asyncio.run(service.run_suite(chosen or list(ClaimId), seed, samples, sizes))
        saved = asyncio.run(service.save_report(report)) if save else None
    except DigraphError as e:
        _fail_usage(ctx, e)
        return
    click.echo(render_suite_json(report) if fmt == "json" else render_suite_text(report), nl=False)
    if saved:
        click.echo(f"report saved to {saved}", err=True)
    ctx.exit(EXIT_OK if report.must_pass_ok else EXIT_VIOLATION)
