"""
Gamma commands.

Available commands:
- eval --z RE[,IM] : log Gamma, Gamma, error estimate, terms used, shift applied
- table --from A --to B --step H : the same quantities over a real grid
"""

import logging

import click

from gammalab.cli import (
    COMPLEX,
    TERMS,
    DomainFailure,
    emit,
    format_complex,
    format_float,
    format_option,
    output_option,
    render_table,
)
from gammalab.config import Config
from gammalab.errors import DomainError, PreconditionError, RangeError

from .algorithms import EvalConfig
from .services import GammaTableService, PointEvaluation

logger = logging.getLogger(__name__)

HEADER = ["z", "log_gamma", "gamma", "error_estimate", "terms_used", "shift_applied"]


def _eval_config(terms, shift_threshold) -> EvalConfig:
    try:
        return EvalConfig.default(terms=terms, shift_threshold=shift_threshold)
    except PreconditionError as e:
        raise click.BadParameter(str(e))


def _row(point: PointEvaluation, fmt, real_argument: bool = False) -> list:
    result = point.log_result
    if real_argument:
        argument = format_float(point.z.real, fmt)
    else:
        argument = format_complex(point.z, fmt)
    return [
        argument,
        format_complex(result.value, fmt),
        format_complex(point.gamma_value, fmt),
        format_float(result.error_estimate, fmt),
        str(result.terms_used),
        str(result.shift_applied),
    ]


def evaluation_options(func):
    func = click.option("--shift-threshold",
                        type=click.FloatRange(1.0, Config.MAX_SHIFT_THRESHOLD),
                        default=Config.SHIFT_THRESHOLD,
                        show_default=True,
                        help="Shift arguments until Re z reaches this value.")(func)
    func = click.option("--terms", type=TERMS, default=Config.DEFAULT_TERMS, show_default=True,
                        help="Series terms, or 'auto' for the smallest-term rule.")(func)
    return func


@click.command("eval")
@click.option("--z", "z", type=COMPLEX, required=True, help="Argument as 'RE' or 'RE,IM'.")
@evaluation_options
@format_option()
@output_option()
def eval_cmd(z, terms, shift_threshold, fmt, output):
    """
    Evaluate log Gamma(z) and Gamma(z) for Re z > 0.

    Examples:

        gammalab eval --z 0.5

        gammalab eval --z 2,3 --terms 5 --format csv
    """
    service = GammaTableService(_eval_config(terms, shift_threshold))
    try:
        point = service.evaluate(z)
    except (DomainError, RangeError) as e:
        logger.warning(f"Rejected argument {z}: {e}")
        raise DomainFailure(str(e))
    emit(render_table(HEADER, [_row(point, fmt)], fmt), output)


@click.command("table")
@click.option("--from", "start", type=float, default=1.0, show_default=True, help="First x.")
@click.option("--to", "stop", type=float, default=10.0, show_default=True, help="Last x.")
@click.option("--step", type=float, default=1.0, show_default=True, help="Grid spacing.")
@evaluation_options
@format_option()
@output_option()
def table_cmd(start, stop, step, terms, shift_threshold, fmt, output):
    """
    Tabulate log Gamma(x) and Gamma(x) on a real grid.

    Examples:

        gammalab table --from 0.5 --to 5 --step 0.5 --format csv
    """
    service = GammaTableService(_eval_config(terms, shift_threshold))
    try:
        points = service.tabulate(start, stop, step)
    except PreconditionError as e:
        raise click.BadParameter(str(e))
    except (DomainError, RangeError) as e:
        logger.warning(f"Rejected grid starting at {start}: {e}")
        raise DomainFailure(str(e))
    rows = [_row(point, fmt, real_argument=True) for point in points]
    emit(render_table(["x", *HEADER[1:]], rows, fmt), output)
