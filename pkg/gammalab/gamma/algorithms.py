"""
Gamma and log Gamma evaluation.

The Stirling series is only accurate for large |z|, so arguments are first
pushed to the right with the recursion

    log Gamma(z) = log Gamma(z + m) - sum_{k=0}^{m-1} log(z + k)

until Re(z + m) reaches the shift threshold. The series is evaluated at
z + m and the logarithms are subtracted; Gamma(z) is the exponential of the
result.

Supported domain: Re z > 0. Every log(z + k) then has |arg| < pi/2, so the
principal branch reproduces the continuous log Gamma of the right half-plane
without any branch tracking. Arguments with Re z <= 0 are rejected before
any computation.
"""

import cmath
import logging
import math
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from gammalab.bernoulli import build_table
from gammalab.config import Config
from gammalab.errors import DomainError, PoleError, PreconditionError, RangeError
from gammalab.stirling import (
    StirlingSeries,
    TruncationPolicy,
    build_series,
    error_estimate,
    eval_log_gamma_raw,
)

logger = logging.getLogger(__name__)

_LOG_FLOAT_MAX = math.log(sys.float_info.max)
_LOG_FLOAT_MIN = math.log(sys.float_info.min)


@lru_cache(maxsize=None)
def default_series(cap: int = Config.SERIES_CAP) -> StirlingSeries:
    """Series with cap + 1 terms, so the term after the cap can serve as error estimate."""
    return build_series(build_table(2 * (cap + 1)), cap + 1)


@dataclass(frozen=True)
class EvalConfig:
    """
    Settings for one evaluation.

    Attributes:
        series (StirlingSeries): coefficients to evaluate with
        policy (TruncationPolicy): how many terms to sum
        shift_threshold (float): smallest Re z at which the series is used directly
    """

    series: StirlingSeries
    policy: TruncationPolicy
    shift_threshold: float = Config.SHIFT_THRESHOLD

    def __post_init__(self):
        if not 1 <= self.shift_threshold <= Config.MAX_SHIFT_THRESHOLD:
            raise PreconditionError(
                f"shift_threshold must be in [1, {Config.MAX_SHIFT_THRESHOLD:g}], "
                f"got {self.shift_threshold}"
            )
        if self.policy.cap > self.series.max_terms:
            raise PreconditionError(
                f"Truncation cap {self.policy.cap} exceeds the series size {self.series.max_terms}"
            )

    @classmethod
    def default(
        cls,
        terms: Optional[int] = None,
        shift_threshold: float = Config.SHIFT_THRESHOLD,
        cap: int = Config.SERIES_CAP,
    ) -> "EvalConfig":
        """
        Build a configuration from the Config defaults.

        Args:
            terms (int or None): fixed term count, or None for the smallest-term rule
            shift_threshold (float): argument reduction threshold
            cap (int): truncation cap

        Returns:
            EvalConfig: ready to pass to log_gamma / gamma
        """
        if terms is None:
            policy = TruncationPolicy.smallest_term(cap)
        else:
            policy = TruncationPolicy.fixed(terms, cap)
        return cls(series=default_series(cap), policy=policy, shift_threshold=shift_threshold)


@dataclass(frozen=True)
class EvalResult:
    """
    Outcome of log_gamma or gamma.

    Attributes:
        value (complex): the computed value
        error_estimate (float): size of the first omitted series term, carried to value
        terms_used (int): series terms summed
        shift_applied (int): number of recursion steps m used for argument reduction
    """

    value: complex
    error_estimate: float
    terms_used: int
    shift_applied: int


def _check_domain(z: complex) -> None:
    if not cmath.isfinite(z):
        raise DomainError(f"Argument must be finite, got {z}")
    if z.real > 0:
        return
    if z.imag == 0 and z.real == math.floor(z.real):
        raise PoleError(f"z = {z.real:g} is a pole of Gamma (outside supported domain Re z > 0)")
    raise DomainError(f"z = {z} is outside supported sector Re z > 0")


def shift_for(z: complex, threshold: float) -> int:
    """Recursion steps needed to bring Re z up to the threshold."""
    return max(0, math.ceil(threshold - complex(z).real))


def log_gamma(z: complex, cfg: EvalConfig) -> EvalResult:
    """
    log Gamma(z) for Re z > 0, on the principal branch.

    Args:
        z (complex): the argument
        cfg (EvalConfig): series, truncation policy and shift threshold

    Returns:
        EvalResult: value, error estimate from the series at z + m,
            terms used and the shift m

    Raises:
        PoleError: for z = 0
        DomainError: for Re z <= 0
        RangeError: if |z| is so large that the series itself is not finite
    """
    z = complex(z)
    _check_domain(z)

    shift = shift_for(z, cfg.shift_threshold)
    shifted = z + shift
    terms = cfg.policy.terms_for(cfg.series, shifted)
    logger.debug(f"log_gamma({z}): shift={shift}, terms={terms}")

    series_value = eval_log_gamma_raw(cfg.series, shifted, terms)
    correction = sum((cmath.log(z + k) for k in range(shift)), 0j)

    if terms < cfg.series.max_terms:
        estimate = error_estimate(cfg.series, shifted, terms)
    else:
        # No omitted term left in the series: report the last included one
        estimate = error_estimate(cfg.series, shifted, terms - 1)

    return EvalResult(
        value=series_value - correction,
        error_estimate=estimate,
        terms_used=terms,
        shift_applied=shift,
    )


def gamma(z: complex, cfg: EvalConfig) -> EvalResult:
    """
    Gamma(z) = exp(log Gamma(z)) for Re z > 0.

    The error estimate of log_gamma is an absolute error in the exponent,
    so it is scaled by |Gamma(z)| here.

    Raises:
        RangeError: when |Gamma(z)| is beyond the normal double range, either
            overflowing or underflowing (large |Im z| with small Re z); the
            log-domain value is attached
    """
    return exp_log_result(z, log_gamma(z, cfg))


def exp_log_result(z: complex, log_result: EvalResult) -> EvalResult:
    """Exponentiate a log_gamma result, with the range checks of gamma."""
    log_modulus = log_result.value.real
    if log_modulus > _LOG_FLOAT_MAX:
        raise RangeError(
            f"Gamma({z}) overflows double precision (log Gamma = {log_result.value})",
            log_value=log_result.value,
        )
    if log_modulus < _LOG_FLOAT_MIN:
        raise RangeError(
            f"Gamma({z}) underflows double precision (log Gamma = {log_result.value})",
            log_value=log_result.value,
        )

    value = cmath.exp(log_result.value)
    return EvalResult(
        value=value,
        error_estimate=abs(value) * log_result.error_estimate,
        terms_used=log_result.terms_used,
        shift_applied=log_result.shift_applied,
    )


def recursion_residual(z: complex, cfg: EvalConfig) -> float:
    """
    |Gamma(z+1) - z Gamma(z)| / |Gamma(z+1)|, using this module's evaluator.

    A self-consistency check of the evaluator against Gamma(z+1) = z Gamma(z).
    The quotient is formed as |1 - exp(log z + log Gamma(z) - log Gamma(z+1))|,
    so it stays defined where Gamma itself overflows or underflows.
    """
    z = complex(z)
    lower = log_gamma(z, cfg).value
    upper = log_gamma(z + 1, cfg).value
    return abs(1 - cmath.exp(cmath.log(z) + lower - upper))
