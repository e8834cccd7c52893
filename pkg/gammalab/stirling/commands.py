"""
Stirling commands.

Available commands:
- coeffs --max N : rows (n, a_n, B_2n) of the log Gamma series
"""

import click

from gammalab.bernoulli import build_table
from gammalab.cli import emit, format_option, format_rational, output_option, render_table

from .algorithms import build_series


@click.command("coeffs")
@click.option("--max", "max_terms", type=click.IntRange(min=1), default=10, show_default=True,
              help="Number of series coefficients to print.")
@format_option()
@output_option()
def coeffs_cmd(max_terms, fmt, output):
    """
    Print the series coefficients a_n = (2n-2)! B_2n / (2n)!.

    Examples:

        gammalab coeffs --max 5 --format csv
    """
    table = build_table(2 * max_terms)
    series = build_series(table, max_terms)
    rows = [
        [str(n), format_rational(series.coefficient(n)), format_rational(table.B[2 * n])]
        for n in range(1, max_terms + 1)
    ]
    emit(render_table(["n", "a", "B_2n"], rows, fmt), output)
