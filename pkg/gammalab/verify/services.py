"""
Verification studies built on the exact oracles.

- error_profile: true truncation error of the series at one exact point,
  for every term count up to a maximum, next to the first-omitted-term
  estimate. Errors first shrink and then grow again once the divergence
  of the series takes over.
- asymptotic_order_slope: log-log slope of the true error against z for a
  fixed term count; it approaches -(2 * terms + 1).

ErrorStudyService holds the series and the Decimal precision and runs the
studies; the module functions are one-shot shortcuts around it. The series
is evaluated in Decimal here (eval_log_gamma_decimal), so errors far below
double precision are still measured correctly.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from gammalab.config import Config
from gammalab.errors import PreconditionError
from gammalab.exactnum import RationalLike
from gammalab.stirling import StirlingSeries, error_estimate, eval_log_gamma_decimal

from .algorithms import log_gamma_reference

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ErrorProfileRow:
    terms: int
    abs_error: float
    first_omitted_term_estimate: float


class ErrorStudyService:
    """
    Service for truncation-error studies of one series against the exact oracles.

    The series and the Decimal precision are fixed when the service is
    created; every study it runs uses both.
    """

    def __init__(self, series: StirlingSeries, digits: int = Config.ORACLE_DIGITS):
        self.series = series
        self.digits = digits

    def true_error(self, z: RationalLike, terms: int) -> float:
        """|truncated series at z - exact log Gamma(z)| at an integer or half-integer z."""
        reference = log_gamma_reference(z, self.digits)
        approximation = eval_log_gamma_decimal(self.series, z, terms, self.digits)
        return float(abs(approximation - reference))

    def profile(self, z: RationalLike, max_terms: int) -> List[ErrorProfileRow]:
        """
        Truncation error of the series at z for 0..max_terms terms.

        Args:
            z (int or Fraction): positive integer or half-integer
            max_terms (int): largest term count; the series needs one more term
                for the estimate column

        Returns:
            List[ErrorProfileRow]: one row per term count

        Raises:
            DomainError: if z has no exact reference
            PreconditionError: if max_terms is too large for the series
        """
        z = Fraction(z)
        if not 0 <= max_terms < self.series.max_terms:
            raise PreconditionError(
                f"max_terms must be in 0..{self.series.max_terms - 1} for this series, "
                f"got {max_terms}"
            )

        reference = log_gamma_reference(z, self.digits)
        rows = []
        for terms in range(max_terms + 1):
            approximation = eval_log_gamma_decimal(self.series, z, terms, self.digits)
            rows.append(
                ErrorProfileRow(
                    terms=terms,
                    abs_error=float(abs(approximation - reference)),
                    first_omitted_term_estimate=error_estimate(self.series, complex(z), terms),
                )
            )
        logger.debug(f"Error profile at z={z} with {len(rows)} rows")
        return rows

    def order_slope(self, terms: int, z_values: Sequence[RationalLike]) -> float:
        """
        Least-squares slope of log(true error) against log(z).

        With `terms` terms the remainder behaves like z^-(2 * terms + 1), so the
        slope should be close to -(2 * terms + 1).
        """
        if len(z_values) < 2:
            raise PreconditionError("need at least two z values for a slope")

        errors = [self.true_error(z, terms) for z in z_values]
        log_z = np.log([float(z) for z in z_values])
        slope, _intercept = np.polyfit(log_z, np.log(errors), 1)
        logger.debug(f"Order slope for {terms} terms over {len(z_values)} points: {slope:.4f}")
        return float(slope)


def true_error(
    series: StirlingSeries, z: RationalLike, terms: int, digits: int = Config.ORACLE_DIGITS
) -> float:
    return ErrorStudyService(series, digits).true_error(z, terms)


def error_profile(
    z: RationalLike,
    max_terms: int,
    series: StirlingSeries,
    digits: int = Config.ORACLE_DIGITS,
) -> List[ErrorProfileRow]:
    return ErrorStudyService(series, digits).profile(z, max_terms)


def asymptotic_order_slope(
    terms: int,
    z_values: Sequence[RationalLike],
    series: StirlingSeries,
    digits: int = Config.ORACLE_DIGITS,
) -> float:
    return ErrorStudyService(series, digits).order_slope(terms, z_values)
