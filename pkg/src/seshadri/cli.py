"""Command-line front end: a thin client over the service handlers.

Exit codes: 0 all checks passed, 1 some check failed (a valid report was
still emitted), 2 usage or parse error, 3 computation budget exceeded.
JSON output is byte-deterministic for fixed flags and seed; wall-clock
timing goes to stderr.
"""

from __future__ import annotations

import sys
import time
from typing import Optional

import click

from .errors import BudgetExceededError, ParameterError, ParseError, SeshadriError
from .reports import VERSION, dumps_report, render_text, report_ok
from .service import handlers
from .service.models import (
    AnalyzeRequest,
    CertifyRequest,
    EnumerateRequest,
    SurfaceRequest,
    ThreefoldRequest,
)

EXIT_OK = 0
EXIT_CHECKS_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(report: dict, output: str, started: float) -> int:
    elapsed_ms = int((time.time() - started) * 1000)
    if output == "json":
        click.echo(dumps_report(report), nl=False)
        click.echo(f"elapsed: {elapsed_ms} ms", err=True)
    else:
        click.echo(render_text(report, elapsed_ms), nl=False)
    return EXIT_OK if report_ok(report) else EXIT_CHECKS_FAILED


def _run(builder, output: str) -> None:
    started = time.time()
    try:
        report = builder()
    except (ParseError, ParameterError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    except BudgetExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_BUDGET)
    except SeshadriError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    sys.exit(_emit(report, output, started))


def _output_option(fn):
    return click.option(
        "--output", type=click.Choice(["json", "text"]), default="text", show_default=True
    )(fn)


@click.group()
@click.version_option(VERSION, prog_name="seshadri")
def main() -> None:
    """Exact certificates and example constructions for local positivity of
    hyperplane bundles."""


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--point", required=True, help="comma-separated rational coordinates")
@click.option("--modulus", type=int, default=None, help="odd prime for the fast pre-check path")
@click.option("--budget", type=int, default=None, help="reduction-step budget")
@_output_option
def analyze(file: str, point: str, modulus: Optional[int], budget: Optional[int], output: str) -> None:
    """Local invariants at a point: multiplicity, tangent cone, line check,
    degree bounds, and a bound certificate where one applies."""

    def build():
        with open(file, "r", encoding="utf-8") as fh:
            text = fh.read()
        req = AnalyzeRequest(polynomial=text, point=point, modulus=modulus, budget=budget)
        return handlers.handle_analyze(req)

    _run(build, output)


@main.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--point", required=True, help="comma-separated rational coordinates")
@click.option("--slice", "with_slice", is_flag=True, default=False, help="attach the tangent-cone slice curve as witness")
@click.option("--modulus", type=int, default=None)
@click.option("--budget", type=int, default=None)
@_output_option
def certify(file: str, point: str, with_slice: bool, modulus: Optional[int], budget: Optional[int], output: str) -> None:
    """Emit a bound certificate for the surface or threefold in FILE."""

    def build():
        with open(file, "r", encoding="utf-8") as fh:
            text = fh.read()
        req = CertifyRequest(
            polynomial=text, point=point, slice=with_slice, modulus=modulus, budget=budget
        )
        return handlers.handle_certify(req)

    _run(build, output)


@main.command("construct-surface")
@click.option("--d", "d", type=int, required=True)
@click.option("--m", "m", type=int, required=True)
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--coeff-bound", type=int, default=10, show_default=True)
@click.option("--max-attempts", type=int, default=25, show_default=True)
@click.option("--budget", type=int, default=None)
@click.option("--modulus", type=int, default=None, help="prime for the prime-field checks")
@_output_option
def construct_surface(d, m, seed, coeff_bound, max_attempts, budget, modulus, output) -> None:
    """Construct and verify a singular surface with pinned constant d/(d-1)."""

    def build():
        req = SurfaceRequest(
            d=d, m=m, seed=seed, coeff_bound=coeff_bound, max_attempts=max_attempts,
            budget=budget, modulus=modulus,
        )
        return handlers.handle_construct_surface(req)

    _run(build, output)


@main.command("construct-threefold")
@click.option("--d", "d", type=int, required=True)
@click.option("--m", "m", type=int, default=2, show_default=True)
@click.option("--seed", type=int, default=1, show_default=True)
@click.option("--coeff-bound", type=int, default=10, show_default=True)
@click.option("--max-attempts", type=int, default=25, show_default=True)
@click.option("--budget", type=int, default=None)
@click.option("--modulus", type=int, default=None, help="prime for the prime-field checks")
@_output_option
def construct_threefold(d, m, seed, coeff_bound, max_attempts, budget, modulus, output) -> None:
    """Construct and verify a threefold, smooth at the base point, with
    pinned constant d/(d-1)."""

    def build():
        req = ThreefoldRequest(
            d=d, m=m, seed=seed, coeff_bound=coeff_bound, max_attempts=max_attempts,
            budget=budget, modulus=modulus,
        )
        return handlers.handle_construct_threefold(req)

    _run(build, output)


@main.command()
@click.option("--d", "d", type=int, required=True)
@click.option("--surface-m", type=int, default=None, help="enumerate the surface clause for this multiplicity")
@click.option("--case", type=click.Choice(["b", "c"]), default=None, help="threefold clause")
@_output_option
def enumerate(d, surface_m, case, output) -> None:
    """Enumerate admissible candidate values a/b for the selected clause."""

    def build():
        req = EnumerateRequest(d=d, surface_m=surface_m, case=case)
        return handlers.handle_enumerate(req)

    _run(build, output)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
