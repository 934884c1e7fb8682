#!/usr/bin/env python3
"""
Command-line interface for chorbifold.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 a verification check (or an internal cross-check) failed, 2 invalid input.
"""

import functools
import logging
import math
import sys
from typing import Any, Callable, Dict, Optional, Tuple

try:
    import click
except ImportError:
    print("Error: click is required for CLI functionality", file=sys.stderr)
    print("Install with: pip install chorbifold[cli]", file=sys.stderr)
    sys.exit(1)

from .chs_model import bergman_distance, parse_point
from .config import (
    DEFAULT_DIGITS,
    DEFAULT_FORMAT,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_TOL,
    DEFAULT_TRIALS,
    MAX_DIGITS,
    OUTPUT_FORMATS,
    SUBCOMMANDS,
    VERIFY_MODULES,
)
from .exceptions import (
    ChorbifoldException,
    DegeneratePlaneError,
    InvalidParameterError,
    MembershipError,
    PreconditionError,
    ShapeError,
    SignError,
)
from .formatting import format_bound_reports, format_rows, format_verification
from .utils import render_decimal
from .verification import run_verification
from .version import __version__
from .volume_bounds import (
    BOUND_COLUMNS,
    LOG10_E,
    bound_table,
    cgb_volume,
    euler_symmetry_bound,
    gunther_ball_volume,
    log_gunther_ball_volume,
    log_unitary_volume,
    orbifold_bound,
    symmetry_order_bound,
    wang_radius,
)

EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2

INPUT_ERRORS = (InvalidParameterError, ShapeError, MembershipError, PreconditionError,
                SignError, DegeneratePlaneError)


def _handle_errors(func: Callable[..., None]) -> Callable[..., None]:
    """Map library exceptions to exit codes, messages to stderr."""
    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            func(*args, **kwargs)
        except INPUT_ERRORS as e:
            click.echo(f"[ERROR] {e}", err=True)
            sys.exit(EXIT_INVALID_INPUT)
        except (ChorbifoldException, ImportError) as e:
            click.echo(f"[ERROR] {e}", err=True)
            sys.exit(EXIT_CHECK_FAILED)
    return wrapper


def _emit_value(row: Dict[str, Any], output: str, digits: int) -> None:
    """Print a single-row result; plain output is just the values."""
    if output == 'plain':
        for value in row.values():
            click.echo(value if isinstance(value, (int, str)) else f"{value:.{digits}g}")
        return
    click.echo(format_rows([row], output, list(row), digits))


def format_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        '--format', 'output',
        type=click.Choice(OUTPUT_FORMATS, case_sensitive=False),
        default=DEFAULT_FORMAT,
        help='Output format',
        show_default=True,
    )(func)


def digits_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        '--digits',
        type=click.IntRange(1, MAX_DIGITS),
        default=DEFAULT_DIGITS,
        help='Significant digits in decimal output',
        show_default=True,
    )(func)


def dimension_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option('-n', 'n', type=int, required=True, help='Complex dimension n >= 1')(func)


@click.group()
@click.version_option(version=__version__, prog_name="chorbifold")
@click.option('--verbose', '-v', is_flag=True, help='Log progress to stderr')
def cli(verbose: bool) -> None:
    """
    chorbifold - volume bounds for complex hyperbolic orbifolds

    Builds su(n,1), its metrics and curvature, certifies the curvature
    bounds numerically and computes the lower bound C(n) on the volume of
    complex hyperbolic n-orbifolds.
    """
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )


@cli.command()
@dimension_option
@click.option('--use-computed-radius', is_flag=True,
              help='Use r0 = R_G/2 from the root finder instead of the printed 0.1385')
@click.option('--tol', type=float, default=DEFAULT_TOL, help='Root-finder tolerance', show_default=True)
@format_option
@digits_option
@_handle_errors
def bound(n: int, use_computed_radius: bool, tol: float, output: str, digits: int) -> None:
    """
    Compute C(n) and everything that goes into it.

    Examples:
        chorbifold bound -n 2
        chorbifold bound -n 2 --format json
        chorbifold bound -n 1 --use-computed-radius
    """
    report = orbifold_bound(n, use_computed_radius=use_computed_radius, tol=tol)
    click.echo(format_bound_reports([report], output, digits))


@cli.command()
@click.option('--from', 'start', type=int, required=True, help='First dimension')
@click.option('--to', 'stop', type=int, required=True, help='Last dimension (inclusive)')
@click.option('--use-computed-radius', is_flag=True, help='Use r0 = R_G/2 from the root finder')
@click.option('--tol', type=float, default=DEFAULT_TOL, help='Root-finder tolerance', show_default=True)
@click.option('--progress', is_flag=True, help='Show a progress bar on stderr')
@format_option
@digits_option
@_handle_errors
def table(start: int, stop: int, use_computed_radius: bool, tol: float, progress: bool,
          output: str, digits: int) -> None:
    """
    One C(n) row per dimension.

    Examples:
        chorbifold table --from 1 --to 10
        chorbifold table --from 1 --to 100 --format csv --progress
    """
    if stop < start:
        raise InvalidParameterError(f"--to ({stop}) must not be smaller than --from ({start})")
    reports = bound_table(range(start, stop + 1), use_computed_radius=use_computed_radius,
                          tol=tol, show_progress=progress)
    if output == 'plain':
        # always a table, even for a single dimension
        click.echo(format_rows([report.to_row(digits) for report in reports], output, BOUND_COLUMNS, digits))
    else:
        click.echo(format_bound_reports(reports, output, digits))


@cli.command('wang-radius')
@click.option('--c1', 'C1', type=float, default=1.0, help='Wang constant C1', show_default=True)
@click.option('--c2', 'C2', type=float, default=1.0, help='Wang constant C2', show_default=True)
@click.option('--tol', type=float, default=DEFAULT_TOL, help='Bracket width', show_default=True)
@format_option
@digits_option
@_handle_errors
def wang_radius_command(C1: float, C2: float, tol: float, output: str, digits: int) -> None:
    """
    Least positive zero R_G of Wang's function.

    Examples:
        chorbifold wang-radius
        chorbifold wang-radius --c1 0.5 --c2 0.5 --digits 12
    """
    _emit_value({'R_G': wang_radius(C1, C2, tol)}, output, digits)


@cli.command('ball-volume')
@click.option('--d', 'd', type=int, required=True, help='Real dimension d >= 2')
@click.option('--k', 'k', type=float, required=True, help='Curvature k > 0')
@click.option('--r', 'r', type=float, required=True, help='Radius r > 0')
@format_option
@digits_option
@_handle_errors
def ball_volume(d: int, k: float, r: float, output: str, digits: int) -> None:
    """
    Volume V(d, k, r) of a ball in the sphere of curvature k.

    Examples:
        chorbifold ball-volume --d 2 --k 1 --r 3.141592653589793
    """
    log10_value = log_gunther_ball_volume(d, k, r) * LOG10_E
    try:
        value = gunther_ball_volume(d, k, r)
    except OverflowError:
        value = math.inf
    shown: Any = value if 0 < value < math.inf else render_decimal(log10_value, digits)
    _emit_value({'V': shown, 'log10_V': log10_value}, output, digits)


@cli.command('unitary-volume')
@dimension_option
@format_option
@digits_option
@_handle_errors
def unitary_volume_command(n: int, output: str, digits: int) -> None:
    """
    Volume of U(n).

    Examples:
        chorbifold unitary-volume -n 2
        chorbifold unitary-volume -n 50
    """
    log_value = log_unitary_volume(n)
    _emit_value({'Vol_U(n)': render_decimal(log_value * LOG10_E, digits),
                 'log10_Vol_U(n)': log_value * LOG10_E}, output, digits)


@cli.command('symmetry-bound')
@click.option('--volume', type=float, required=True, help='Orbifold volume (> 0)')
@dimension_option
@format_option
@_handle_errors
def symmetry_bound(volume: float, n: int, output: str) -> None:
    """
    Upper bound on the order of an isometry group: floor(volume / C(n)).

    Examples:
        chorbifold symmetry-bound --volume 26.3189 -n 2
    """
    _emit_value({'order_bound': symmetry_order_bound(volume, n)}, output, DEFAULT_DIGITS)


@cli.command('euler-bound')
@click.option('--chi', type=int, required=True, help='Euler characteristic')
@dimension_option
@format_option
@digits_option
@_handle_errors
def euler_bound(chi: int, n: int, output: str, digits: int) -> None:
    """
    Symmetry bound from the Euler characteristic via Chern-Gauss-Bonnet.

    Examples:
        chorbifold euler-bound --chi 3 -n 2
        chorbifold euler-bound --chi -2 -n 1
    """
    row: Dict[str, Any] = {'order_bound': euler_symmetry_bound(n, chi)}
    if output != 'plain':
        row['volume'] = cgb_volume(n, chi)
    _emit_value(row, output, digits)


@cli.command()
@dimension_option
@click.option('--z', 'z_text', required=True, help="First point, e.g. '0,0,1'")
@click.option('--w', 'w_text', required=True, help="Second point, e.g. '0.5,0,1'")
@format_option
@digits_option
@_handle_errors
def distance(n: int, z_text: str, w_text: str, output: str, digits: int) -> None:
    """
    Bergman distance between two points given by lifts in C^(n+1).

    Examples:
        chorbifold distance -n 1 --z 0,1 --w 0.5,1
        chorbifold distance -n 2 --z '0.1+0.2i,0,1' --w '0,-0.3i,1'
    """
    z = parse_point(z_text, n)
    w = parse_point(w_text, n)
    _emit_value({'distance': bergman_distance(z, w)}, output, digits)


@cli.command()
@dimension_option
@click.option('--module', 'modules', type=click.Choice(list(VERIFY_MODULES)), multiple=True,
              help='Suite to run (repeatable; default all)')
@click.option('--trials', type=click.IntRange(min=1), default=DEFAULT_TRIALS,
              help='Samples per sampled invariant', show_default=True)
@click.option('--samples', type=click.IntRange(min=1), default=DEFAULT_SAMPLES,
              help='Random candidates per part for the Wang constants', show_default=True)
@click.option('--seed', type=click.IntRange(min=0), default=DEFAULT_SEED, help='PRNG seed', show_default=True)
@format_option
@digits_option
@_handle_errors
def verify(n: int, modules: Tuple[str, ...], trials: int, samples: int, seed: int,
           output: str, digits: int) -> None:
    """
    Run the verification suites and report every check.

    Exits with 1 when any check fails; the report is printed either way.

    Examples:
        chorbifold verify -n 1 --trials 10
        chorbifold verify -n 3 --module curvature --format json
    """
    report = run_verification(n, modules=list(modules) or None, trials=trials, seed=seed, samples=samples)
    click.echo(format_verification(report, output, digits))
    if not report.passed:
        click.echo(f"[FAIL] {len(report.failures)} check(s) failed", err=True)
        sys.exit(EXIT_CHECK_FAILED)


@cli.command()
def info() -> None:
    """Show package information."""
    click.echo("\n" + "=" * 60)
    click.echo("chorbifold - complex hyperbolic orbifold volume bounds")
    click.echo("=" * 60)
    click.echo(f"\nVersion: {__version__}")
    click.echo("License: MIT")
    click.echo(f"\nSubcommands: {', '.join(SUBCOMMANDS)}")
    click.echo(f"Output formats: {', '.join(OUTPUT_FORMATS)}")
    click.echo("\nVerification suites:")
    for name, description in VERIFY_MODULES.items():
        click.echo(f"  {name:16} {description}")
    click.echo(f"\nDefaults: seed={DEFAULT_SEED}, trials={DEFAULT_TRIALS}, tol={DEFAULT_TOL:g}, "
               f"digits={DEFAULT_DIGITS}")
    click.echo("\n" + "=" * 60)


def main(argv: Optional[list] = None) -> None:
    """Main entry point for CLI."""
    cli(args=argv)


if __name__ == '__main__':
    main()
