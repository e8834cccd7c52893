"""
Bernoulli commands.

Available commands:
- bernoulli --max J : rows (j, c_j, B_j) as exact fractions
"""

import click

from gammalab.cli import emit, format_option, format_rational, output_option, render_table

from .algorithms import build_table


@click.command("bernoulli")
@click.option("--max", "max_index", type=click.IntRange(min=0), default=10, show_default=True,
              help="Largest index j to print.")
@format_option()
@output_option()
def bernoulli_cmd(max_index, fmt, output):
    """
    Print the recursion coefficients c_j and Bernoulli numbers B_j = j! c_j.

    Examples:

        gammalab bernoulli --max 4

        gammalab bernoulli --max 1 --format csv
    """
    table = build_table(max_index)
    rows = [
        [str(j), format_rational(c_j), format_rational(b_j)]
        for j, (c_j, b_j) in enumerate(zip(table.c, table.B))
    ]
    emit(render_table(["j", "c", "B"], rows, fmt), output)
