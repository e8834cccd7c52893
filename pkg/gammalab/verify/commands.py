"""
Verification commands.

Available commands:
- cestimate --n 5,10,20,40 --terms T : estimates of C and their deviation from sqrt(2 pi)
- error-profile --z Z --max M : true series error vs. terms at an exact point (CSV)
"""

import logging
from fractions import Fraction

import click

from gammalab.cli import (
    DomainFailure,
    OutputFormat,
    emit,
    format_float,
    format_option,
    output_option,
    render_table,
    split_int_list,
)
from gammalab.config import Config
from gammalab.errors import DomainError
from gammalab.gamma import default_series

from .algorithms import convergence_study
from .services import ErrorStudyService

logger = logging.getLogger(__name__)


@click.command("cestimate")
@click.option("--n", "n_values", multiple=True, callback=split_int_list,
              help="Half-integer points w = n + 1/2; repeatable or comma separated.")
@click.option("--terms", type=click.IntRange(min=0), default=0, show_default=True,
              help="Series terms in the C-free part.")
@format_option()
@output_option()
def cestimate_cmd(n_values, terms, fmt, output):
    """
    Recover the constant C = sqrt(2 pi) from exact half-integer Gamma values.

    Examples:

        gammalab cestimate --n 5,10,20,40 --terms 0 --format csv
    """
    n_values = n_values or [5, 10, 20, 40]
    bad = [n for n in n_values if n < 1]
    if bad:
        raise click.BadParameter(f"all n must be >= 1, got {bad}", param_hint="'--n'")
    if terms > Config.SERIES_CAP:
        raise click.BadParameter(
            f"terms {terms} exceeds the series cap {Config.SERIES_CAP}", param_hint="'--terms'"
        )

    rows = convergence_study(n_values, terms, default_series())
    cells = [
        [str(row.n), format_float(row.estimate.value, fmt), format_float(row.deviation, fmt)]
        for row in rows
    ]
    emit(render_table(["n", "C_estimate", "deviation"], cells, fmt), output)


def _parse_exact_point(ctx, param, value) -> Fraction:
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise click.BadParameter(f"{value!r} is not a real number", ctx=ctx, param=param)


@click.command("error-profile")
@click.option("--z", "z", required=True, callback=_parse_exact_point,
              help="Positive integer or half-integer argument.")
@click.option("--max", "--max-terms", "max_terms", type=click.IntRange(min=0), default=20,
              show_default=True, help="Largest number of series terms.")
@output_option()
def error_profile_cmd(z, max_terms, output):
    """
    Write the truncation error of the series at z for 0..max terms as CSV.

    Columns: terms, abs_error, first_omitted_term_estimate. Only positive
    integers and half-integers have an exact reference value.

    Examples:

        gammalab error-profile --z 2 --max 20 --output profile.csv
    """
    if max_terms > Config.SERIES_CAP:
        raise click.BadParameter(
            f"max {max_terms} exceeds the series cap {Config.SERIES_CAP}", param_hint="'--max'"
        )
    try:
        rows = ErrorStudyService(default_series()).profile(z, max_terms)
    except DomainError as e:
        logger.warning(f"No error profile at z={z}: {e}")
        raise DomainFailure(str(e))

    fmt = OutputFormat.CSV
    cells = [
        [str(row.terms), format_float(row.abs_error, fmt),
         format_float(row.first_omitted_term_estimate, fmt)]
        for row in rows
    ]
    emit(render_table(["terms", "abs_error", "first_omitted_term_estimate"], cells, fmt), output)
