"""
Command-line plumbing shared by every gammalab command.

The commands themselves live next to the code they expose
(bernoulli/commands.py, stirling/commands.py, ...) and are registered on
the root group by gammalab.create_cli(). This module holds what they share:

- OutputFormat and the rendering of exact rationals, floats and complex numbers
- table rendering (aligned plain text or CSV) and writing to stdout or a file
- click parameter types for complex arguments, term counts and n lists
- the root group class that fixes the exit codes: 0 ok, 1 usage, 2 domain
- logging setup (stderr only)
"""

import logging
import math
import sys
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

import click
import pandas as pd

from gammalab.config import Config

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


class OutputFormat(str, Enum):
    PLAIN = "plain"
    CSV = "csv"


# ---------------------------------------------------------------------------
# Value rendering
# ---------------------------------------------------------------------------

def format_rational(value: Fraction) -> str:
    """'p/q', or 'p' when q = 1, with no spaces."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float(value: float, fmt: OutputFormat) -> str:
    """Shortest round-trip repr for CSV, 12 significant digits for plain text."""
    value = float(value)
    if fmt == OutputFormat.CSV:
        return repr(value)
    return f"{value:.12g}"


def format_complex(value: complex, fmt: OutputFormat) -> str:
    """'RE+IMi' / 'RE-IMi' with an explicit sign on the imaginary part."""
    value = complex(value)
    sign = "-" if math.copysign(1.0, value.imag) < 0 else "+"
    return f"{format_float(value.real, fmt)}{sign}{format_float(abs(value.imag), fmt)}i"


def render_table(header: Sequence[str], rows: Sequence[Sequence[str]], fmt: OutputFormat) -> str:
    """
    Render pre-formatted cells as CSV or as right-aligned plain-text columns.

    Cells are strings already, so pandas only lays them out and never
    reformats a number. CSV output has exactly one header row and LF line
    endings.
    """
    df = pd.DataFrame([list(row) for row in rows], columns=list(header), dtype=object)

    if fmt == OutputFormat.CSV:
        return df.to_csv(index=False, lineterminator="\n")
    if df.empty:
        return "  ".join(header) + "\n"
    return df.to_string(index=False, justify="right") + "\n"


def emit(text: str, output: Optional[str]) -> None:
    """Write rendered output to stdout, or to `output` as UTF-8 with LF endings."""
    if output in (None, "-"):
        click.echo(text, nl=False)
        return
    try:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as e:
        raise click.FileError(output, hint=e.strerror or str(e))


# ---------------------------------------------------------------------------
# Shared options and parameter types
# ---------------------------------------------------------------------------

def format_option(default: OutputFormat = OutputFormat.PLAIN):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice([f.value for f in OutputFormat]),
        default=default.value,
        show_default=True,
        callback=lambda ctx, param, value: OutputFormat(value),
        help="Output format.",
    )


def output_option():
    return click.option(
        "--output",
        type=click.Path(dir_okay=False, writable=True),
        default=None,
        help="Write to PATH instead of standard output.",
    )


class ComplexParamType(click.ParamType):
    """Accepts 'RE' or 'RE,IM'."""

    name = "RE[,IM]"

    def convert(self, value, param, ctx):
        if isinstance(value, complex):
            return value
        parts = str(value).split(",")
        try:
            if len(parts) == 1:
                return complex(float(parts[0]), 0.0)
            if len(parts) == 2:
                return complex(float(parts[0]), float(parts[1]))
        except ValueError:
            pass
        self.fail(f"{value!r} is not a number 'RE' or a pair 'RE,IM'", param, ctx)


class TermsParamType(click.ParamType):
    """Accepts 'auto' (smallest-term rule, converted to None) or a non-negative integer."""

    name = "INTEGER|auto"

    def convert(self, value, param, ctx):
        if value is None or (isinstance(value, str) and value.lower() == "auto"):
            return None
        try:
            terms = int(value)
        except (TypeError, ValueError):
            self.fail(f"{value!r} is neither 'auto' nor an integer", param, ctx)
        if terms < 0:
            self.fail(f"term count must be >= 0, got {terms}", param, ctx)
        return terms


COMPLEX = ComplexParamType()
TERMS = TermsParamType()


def split_int_list(ctx, param, values) -> List[int]:
    """Callback for repeatable options that also accept comma lists ('--n 5,10 --n 20')."""
    numbers: List[int] = []
    for value in values:
        for part in str(value).split(","):
            part = part.strip()
            if not part:
                continue
            try:
                numbers.append(int(part))
            except ValueError:
                raise click.BadParameter(f"{part!r} is not an integer", ctx=ctx, param=param)
    return numbers


class DomainFailure(click.ClickException):
    """An argument outside the supported domain; exits with code 2."""

    exit_code = EXIT_DOMAIN

    def __init__(self, message: str):
        super().__init__(f"outside supported domain: {message}")


# ---------------------------------------------------------------------------
# Root group and logging
# ---------------------------------------------------------------------------

class GammaLabGroup(click.Group):
    """
    Root command group with gammalab's exit codes.

    click reports usage errors with exit code 2, which gammalab reserves for
    domain errors, so errors are caught here and mapped: usage and argument
    errors exit 1, DomainFailure exits 2.
    """

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(
                args=args,
                prog_name=prog_name,
                complete_var=complete_var,
                standalone_mode=False,
                **extra,
            )
            code = rv if isinstance(rv, int) else EXIT_OK
        except click.UsageError as e:
            e.show()
            code = EXIT_USAGE
        except click.ClickException as e:
            e.show()
            code = e.exit_code if e.exit_code == EXIT_DOMAIN else EXIT_USAGE
        except click.Abort:
            click.echo("Aborted!", err=True)
            code = EXIT_USAGE

        if standalone_mode:
            sys.exit(code)
        return code


class ClickEchoHandler(logging.Handler):
    """Logging handler that writes through click.echo to stderr."""

    def emit(self, record):
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def configure_logging(verbosity: int = 0) -> logging.Logger:
    """
    Attach one stderr handler to the gammalab logger.

    verbosity 0 uses Config.LOG_LEVEL, 1 is INFO, 2 or more is DEBUG.
    """
    logger = logging.getLogger("gammalab")
    if not any(isinstance(h, ClickEchoHandler) for h in logger.handlers):
        handler = ClickEchoHandler()
        handler.setFormatter(logging.Formatter(Config.LOG_FORMAT))
        logger.addHandler(handler)
        logger.propagate = False

    if verbosity <= 0:
        logger.setLevel(Config.LOG_LEVEL)
    elif verbosity == 1:
        logger.setLevel(logging.INFO)
    else:
        logger.setLevel(logging.DEBUG)
    return logger
