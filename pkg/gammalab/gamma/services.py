"""
Gamma services for gammalab.

This module coordinates the evaluator for the outer commands.

Key responsibilities:
- Evaluate log Gamma and Gamma together at one argument
- Keep the log Gamma value when Gamma itself leaves the double range
- Build real evaluation grids and tabulate over them
"""

import logging
import math
from dataclasses import dataclass
from typing import List

import numpy as np

from gammalab.errors import PreconditionError, RangeError

from .algorithms import EvalConfig, EvalResult, exp_log_result, log_gamma

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointEvaluation:
    """log Gamma and Gamma at one argument."""

    z: complex
    log_result: EvalResult
    gamma_value: complex

    @property
    def overflowed(self) -> bool:
        return math.isinf(self.gamma_value.real)


def grid_points(start: float, stop: float, step: float) -> List[float]:
    """
    start, start + step, ... up to stop (inclusive, with a small tolerance).

    Points are computed as start + k * step rather than by repeated addition,
    so the grid does not drift.
    """
    if not step > 0:
        raise PreconditionError(f"step must be positive, got {step}")
    if stop < start:
        raise PreconditionError(f"--to ({stop}) must not be below --from ({start})")

    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [float(x) for x in start + step * np.arange(count)]


class GammaTableService:
    """
    Service for evaluating log Gamma and Gamma at points and over grids.

    One service holds one EvalConfig, so every point it reports uses the
    same series, truncation policy and shift threshold.
    """

    def __init__(self, cfg: EvalConfig):
        self.cfg = cfg

    def evaluate(self, z: complex) -> PointEvaluation:
        """
        Evaluate log Gamma(z) once and exponentiate it.

        When Gamma(z) leaves the double range the log Gamma result is still
        returned; Gamma is reported as infinity on overflow and 0 on underflow.

        Raises:
            DomainError: for Re z <= 0 (PoleError at the poles)
        """
        log_result = log_gamma(z, self.cfg)
        try:
            gamma_value = exp_log_result(z, log_result).value
        except RangeError as e:
            logger.warning(str(e))
            gamma_value = complex(math.inf if log_result.value.real > 0 else 0.0, 0.0)
        return PointEvaluation(z=complex(z), log_result=log_result, gamma_value=gamma_value)

    def tabulate(self, start: float, stop: float, step: float) -> List[PointEvaluation]:
        """Evaluate log Gamma and Gamma on the real grid from start to stop."""
        points = grid_points(start, stop, step)
        logger.info(f"Evaluating gamma table with {len(points)} points")
        return [self.evaluate(x) for x in points]


def evaluate_point(z: complex, cfg: EvalConfig) -> PointEvaluation:
    return GammaTableService(cfg).evaluate(z)


def gamma_table(start: float, stop: float, step: float, cfg: EvalConfig) -> List[PointEvaluation]:
    """
    Table of log Gamma(x) and Gamma(x) for x = start, start + step, ..., stop.

    Raises:
        PreconditionError: for a non-positive step or stop < start
        DomainError: if a grid point has Re x <= 0
    """
    return GammaTableService(cfg).tabulate(start, stop, step)
