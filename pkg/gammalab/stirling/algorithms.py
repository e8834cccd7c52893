"""
Stirling series for log Gamma.

    log Gamma(z) ~ (z - 1/2) log z - z + log C + sum_{n>=1} a_n / z^(2n-1)

with a_n = (2n-2)! B_2n / (2n)! and C = sqrt(2 pi). The series diverges for
every fixed z, so it is always used truncated: either at a fixed number of
terms or at the smallest term (optimal truncation).

Coefficients are generated exactly from a BernoulliTable and converted to
floats once, when the series is built; evaluation is plain complex floating
point on the principal branch of log.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional, Tuple

from gammalab.bernoulli import BernoulliTable
from gammalab.config import Config
from gammalab.errors import DomainError, PoleError, PreconditionError, RangeError
from gammalab.exactnum import RationalLike, factorial, half_log_two_pi, sqrt_two_pi

logger = logging.getLogger(__name__)

FIXED = "fixed"
SMALLEST_TERM = "smallest_term"

# exp() of anything above this overflows a double
_LOG_FLOAT_MAX = math.log(1.7976931348623157e308)


def _log_abs(q: Fraction) -> float:
    # math.log accepts arbitrarily large ints, so huge coefficients stay finite
    return math.log(abs(q.numerator)) - math.log(q.denominator)


@dataclass(frozen=True)
class StirlingSeries:
    """
    The coefficients a_1..a_N and log C, ready for evaluation.

    Attributes:
        a (tuple of Fraction): exact coefficients, a[0] holds a_1
        a_float (tuple of float): the same coefficients in double precision
        log_abs_a (tuple of float): log |a_n|, for term comparisons in log space
        log_C (float): 1/2 log(2 pi)
    """

    a: Tuple[Fraction, ...]
    a_float: Tuple[float, ...]
    log_abs_a: Tuple[float, ...]
    log_C: float

    @property
    def max_terms(self) -> int:
        return len(self.a)

    def coefficient(self, n: int) -> Fraction:
        """a_n with the 1-based index used in the series."""
        if not 1 <= n <= self.max_terms:
            raise IndexError(f"Series index {n} outside 1..{self.max_terms}")
        return self.a[n - 1]


@dataclass(frozen=True)
class TruncationPolicy:
    """
    How many series terms to sum.

    Attributes:
        mode (str): FIXED or SMALLEST_TERM
        cap (int): never sum more than this many terms
        terms (int or None): the term count for FIXED mode
    """

    mode: str
    cap: int
    terms: Optional[int] = None

    def __post_init__(self):
        if self.mode not in (FIXED, SMALLEST_TERM):
            raise DomainError(f"Unknown truncation mode {self.mode!r}")
        if self.cap < 1:
            raise PreconditionError(f"Truncation cap must be positive, got {self.cap}")
        if self.mode == FIXED:
            if self.terms is None or not 0 <= self.terms <= self.cap:
                raise PreconditionError(
                    f"Fixed truncation needs 0 <= terms <= cap ({self.cap}), got {self.terms}"
                )

    @classmethod
    def fixed(cls, terms: int, cap: int = Config.SERIES_CAP) -> "TruncationPolicy":
        return cls(mode=FIXED, cap=cap, terms=terms)

    @classmethod
    def smallest_term(cls, cap: int = Config.SERIES_CAP) -> "TruncationPolicy":
        return cls(mode=SMALLEST_TERM, cap=cap)

    def terms_for(self, series: StirlingSeries, z: complex) -> int:
        """Number of terms this policy sums at z."""
        if self.mode == FIXED:
            return self.terms
        return smallest_term_index(series, z, cap=self.cap)


def build_series(table: BernoulliTable, max_terms: int) -> StirlingSeries:
    """
    Build a_1..a_N from the Bernoulli numbers in `table`.

    Args:
        table (BernoulliTable): must hold B_0..B_2N
        max_terms (int): N, number of coefficients (>= 1)

    Returns:
        StirlingSeries: exact and float coefficients plus log C

    Raises:
        PreconditionError: if the table is too small for N terms
    """
    if max_terms < 1:
        raise DomainError(f"Series needs at least one term, got {max_terms}")
    if table.max_index < 2 * max_terms:
        raise PreconditionError(
            f"Bernoulli table up to J={table.max_index} is too small for "
            f"{max_terms} series terms (needs J >= {2 * max_terms})"
        )

    a = tuple(
        factorial(2 * n - 2) * table.B[2 * n] / factorial(2 * n)
        for n in range(1, max_terms + 1)
    )
    logger.debug(f"Built Stirling series with {max_terms} terms")
    return StirlingSeries(
        a=a,
        a_float=tuple(float(a_n) for a_n in a),
        log_abs_a=tuple(_log_abs(a_n) for a_n in a),
        log_C=half_log_two_pi(),
    )


def expansion_coefficient(table: BernoulliTable, n: int) -> Fraction:
    """
    a_n obtained from c_2n and the derivative f0^(2n)(z) = (2n-2)! / z^(2n-1).

    This is the coefficient of 1/z^(2n-1) in sum_j c_j f0^(j)(z) before
    Bernoulli numbers are introduced; it must equal build_series' a_n.
    """
    if n < 1 or table.max_index < 2 * n:
        raise PreconditionError(f"Table up to J={table.max_index} has no c_{2 * n}")
    return table.c[2 * n] * factorial(2 * n - 2)


def _check_argument(z: complex) -> None:
    if not cmath.isfinite(z):
        raise DomainError(f"Argument must be finite, got {z}")
    if z == 0:
        raise PoleError("z = 0 is a pole of Gamma")
    if z.imag == 0 and z.real < 0:
        raise DomainError(f"z = {z.real} lies on the branch cut of log (real z <= 0)")


def eval_log_gamma_raw(series: StirlingSeries, z: complex, n_used: int) -> complex:
    """
    Evaluate the truncated series at z without any argument reduction.

    Returns (z - 1/2) log z - z + log C + sum_{n=1}^{n_used} a_n / z^(2n-1),
    with the principal branch of log.

    Args:
        series (StirlingSeries): the coefficients
        z (complex): argument off the branch cut
        n_used (int): number of series terms, 0 <= n_used <= series.max_terms

    Returns:
        complex: the truncated log Gamma approximation

    Raises:
        RangeError: if the sum is not finite, e.g. tiny |z| with n_used > 0
    """
    z = complex(z)
    _check_argument(z)
    if not 0 <= n_used <= series.max_terms:
        raise PreconditionError(f"n_used must be in 0..{series.max_terms}, got {n_used}")

    value = (z - 0.5) * cmath.log(z) - z + series.log_C

    if n_used > 0:
        # Horner in 1/z^2, smallest terms first
        inv_z = 1 / z
        inv_z_squared = inv_z * inv_z
        tail = 0j
        for a_n in reversed(series.a_float[:n_used]):
            tail = tail * inv_z_squared + a_n
        value += tail * inv_z

    if not cmath.isfinite(value):
        raise RangeError(f"{n_used}-term series at z = {z} does not fit in double precision")
    return value


def _log_term(series: StirlingSeries, n: int, log_abs_z: float) -> float:
    # log of |a_n| / |z|^(2n-1)
    return series.log_abs_a[n - 1] - (2 * n - 1) * log_abs_z


def smallest_term_index(series: StirlingSeries, z: complex, cap: Optional[int] = None) -> int:
    """
    Index of the smallest series term at z, scanning n = 1..cap.

    Returns the first n whose successor is larger (the first local minimum
    of |a_n| / |z|^(2n-1)); if the terms still decrease at the cap, returns
    the cap.
    """
    cap = series.max_terms if cap is None else cap
    if not 1 <= cap <= series.max_terms:
        raise PreconditionError(f"cap must be in 1..{series.max_terms}, got {cap}")
    radius = abs(complex(z))
    if radius == 0:
        raise PoleError("z = 0 is a pole of Gamma")

    log_abs_z = math.log(radius)
    previous = _log_term(series, 1, log_abs_z)
    for n in range(1, cap):
        current = _log_term(series, n + 1, log_abs_z)
        if current > previous:
            return n
        previous = current
    return cap


def error_estimate(series: StirlingSeries, z: complex, n_used: int) -> float:
    """
    Magnitude of the first omitted term, |a_{N+1}| / |z|^(2N+1).

    This is a heuristic. For real z > 0 the remainder of the Stirling series
    is bounded by the first omitted term; for complex z it is only an
    indication.
    """
    if not 0 <= n_used < series.max_terms:
        raise PreconditionError(
            f"error estimate needs term {n_used + 1}, series has {series.max_terms}"
        )
    radius = abs(complex(z))
    if radius == 0:
        raise PoleError("z = 0 is a pole of Gamma")

    log_term = _log_term(series, n_used + 1, math.log(radius))
    if log_term > _LOG_FLOAT_MAX:
        return math.inf
    return math.exp(log_term)


def eval_log_gamma_decimal(
    series: StirlingSeries, z: RationalLike, n_used: int, digits: int = Config.ORACLE_DIGITS
) -> Decimal:
    """
    The truncated series at a positive rational z, in Decimal arithmetic.

    The series sum is formed exactly and only the logarithms are rounded, so
    the truncation error can be measured well below double precision.

    Args:
        series (StirlingSeries): the coefficients
        z (int or Fraction): positive argument
        n_used (int): number of series terms
        digits (int): working precision in significant digits

    Returns:
        Decimal: the truncated log Gamma approximation
    """
    z = Fraction(z)
    if z <= 0:
        raise DomainError(f"Decimal evaluation needs z > 0, got {z}")
    if not 0 <= n_used <= series.max_terms:
        raise PreconditionError(f"n_used must be in 0..{series.max_terms}, got {n_used}")

    tail = sum((series.a[n - 1] / z ** (2 * n - 1) for n in range(1, n_used + 1)), Fraction(0))

    with localcontext() as ctx:
        ctx.prec = digits + 10
        z_dec = Decimal(z.numerator) / Decimal(z.denominator)
        log_C = sqrt_two_pi(digits + 10).value.ln()
        value = (
            (z_dec - Decimal("0.5")) * z_dec.ln()
            - z_dec
            + log_C
            + Decimal(tail.numerator) / Decimal(tail.denominator)
        )
    return value
