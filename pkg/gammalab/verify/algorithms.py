"""
Exact oracles for Gamma and the recovery of the Stirling constant C.

Key facts used here:
- Gamma(n) = (n-1)! at positive integers.
- Gamma(n + 1/2) = (2n)! sqrt(pi) / (4^n n!) = r_n sqrt(pi), with r_n an
  exact rational. It follows from Gamma(1/2) = sqrt(pi) and
  Gamma(z+1) = z Gamma(z) by induction on n.

C is recovered at half-integers w = n + 1/2 rather than at integers. There
the left side Gamma(w) = r_n sqrt(pi) is exact, and the C-free part of the
exponentiated series is

    w^(w-1/2) e^(-w) exp(sum_k a_k / w^(2k-1)) = w^n exp(S - w)

with S exact, so everything stays exact or in high-precision Decimal until
the final division. Dividing one by the other gives an estimate of C that
tends to sqrt(2 pi) as n grows.
"""

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import List, Sequence

from gammalab.config import Config
from gammalab.errors import DomainError
from gammalab.exactnum import ExactInteger, RationalLike, factorial, sqrt_pi, sqrt_two_pi
from gammalab.stirling import StirlingSeries


def _to_decimal(value: Fraction) -> Decimal:
    # Uses the precision of the active decimal context
    return Decimal(value.numerator) / Decimal(value.denominator)


@dataclass(frozen=True)
class HalfIntegerValue:
    """Gamma(n + 1/2) = r * sqrt(pi) with r exact."""

    n: int
    r: Fraction


@dataclass(frozen=True)
class CEstimate:
    """
    One estimate of the Stirling constant.

    Attributes:
        n (int): the half-integer point is w = n + 1/2
        terms (int): series terms used in the C-free part
        value (float): the estimate in double precision
        exact_value (Decimal): the estimate at Config.ORACLE_DIGITS digits
    """

    n: int
    terms: int
    value: float
    exact_value: Decimal


@dataclass(frozen=True)
class ConvergenceRow:
    """An estimate of C and its distance from sqrt(2 pi)."""

    n: int
    estimate: CEstimate
    deviation: Decimal


def half_integer_exact(n: int) -> HalfIntegerValue:
    """r_n = (2n)! / (4^n n!), so that Gamma(n + 1/2) = r_n sqrt(pi)."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return HalfIntegerValue(n=n, r=Fraction(factorial(2 * n), 4 ** n * factorial(n)))


def integer_exact(n: int) -> ExactInteger:
    """Gamma(n) = (n-1)! for n >= 1."""
    if n < 1:
        raise DomainError(f"Gamma(n) has an exact factorial value only for n >= 1, got {n}")
    return factorial(n - 1)


def _exact_reference_point(z: RationalLike) -> Fraction:
    z = Fraction(z)
    if z <= 0 or (2 * z).denominator != 1:
        raise DomainError(
            f"no exact reference at z = {z}: only positive integers and half-integers have one"
        )
    return z


def gamma_reference(z: RationalLike, digits: int = Config.ORACLE_DIGITS) -> Decimal:
    """Gamma(z) at a positive integer or half-integer, to `digits` digits."""
    z = _exact_reference_point(z)
    with localcontext() as ctx:
        ctx.prec = digits
        if z.denominator == 1:
            return +Decimal(integer_exact(z.numerator))
        r = half_integer_exact(int(z - Fraction(1, 2))).r
        return _to_decimal(r) * sqrt_pi(digits + 10).value


def log_gamma_reference(z: RationalLike, digits: int = Config.ORACLE_DIGITS) -> Decimal:
    """log Gamma(z) at a positive integer or half-integer, to `digits` digits."""
    z = _exact_reference_point(z)
    with localcontext() as ctx:
        ctx.prec = digits + 10
        value = gamma_reference(z, digits + 10).ln()
        ctx.prec = digits
        return +value


def estimate_C(
    n: int, terms: int, series: StirlingSeries, digits: int = Config.ORACLE_DIGITS
) -> CEstimate:
    """
    Estimate C from the exact Gamma(n + 1/2) and the C-free part of the series.

    Args:
        n (int): point index, w = n + 1/2 (n >= 1)
        terms (int): series terms in the C-free part (0..series.max_terms)
        series (StirlingSeries): the coefficients
        digits (int): Decimal precision of the result

    Returns:
        CEstimate: the estimate as float and as Decimal

    Raises:
        DomainError: if n < 1 or terms is outside 0..series.max_terms
    """
    if n < 1:
        raise DomainError(f"estimate_C needs n >= 1, got {n}")
    if not 0 <= terms <= series.max_terms:
        raise DomainError(f"terms must be in 0..{series.max_terms}, got {terms}")

    w = Fraction(2 * n + 1, 2)
    r = half_integer_exact(n).r
    partial_sum = sum(
        (series.a[k - 1] / w ** (2 * k - 1) for k in range(1, terms + 1)), Fraction(0)
    )

    with localcontext() as ctx:
        ctx.prec = digits + 10
        gamma_exact = _to_decimal(r) * sqrt_pi(digits + 10).value
        # w^(w - 1/2) is w^n exactly, since w - 1/2 = n
        c_free = _to_decimal(w ** n) * _to_decimal(partial_sum - w).exp()
        value = gamma_exact / c_free
        ctx.prec = digits
        value = +value

    return CEstimate(n=n, terms=terms, value=float(value), exact_value=value)


def convergence_study(
    n_values: Sequence[int],
    terms: int,
    series: StirlingSeries,
    digits: int = Config.ORACLE_DIGITS,
) -> List[ConvergenceRow]:
    """
    Estimate C at each n and measure |C_est - sqrt(2 pi)| in Decimal.

    Rows come back in the order of n_values.
    """
    for n in n_values:
        if n < 1:
            raise DomainError(f"all n must be >= 1, got {n}")

    reference = sqrt_two_pi(digits).value
    rows = []
    for n in n_values:
        estimate = estimate_C(n, terms, series, digits)
        with localcontext() as ctx:
            ctx.prec = digits
            deviation = abs(estimate.exact_value - reference)
        rows.append(ConvergenceRow(n=n, estimate=estimate, deviation=deviation))
    return rows
