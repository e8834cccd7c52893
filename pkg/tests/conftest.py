"""
Shared fixtures and the independent logarithm oracle for the gammalab tests.

The oracle computes natural logarithms of positive rationals in exact
integer/rational arithmetic (argument scaling by powers of two plus the
atanh series), so reference values never come from the code under test.
"""

from fractions import Fraction

import pytest
from click.testing import CliRunner

from gammalab import create_cli
from gammalab.bernoulli import build_table
from gammalab.gamma import EvalConfig, default_series

ORACLE_DIGITS = 40


def _atanh_scaled(p: int, q: int, unity: int) -> int:
    """atanh(p/q) * unity for 0 <= p/q < 1, fixed point."""
    power = unity * p // q
    total = power
    divisor = 1
    while power:
        power = power * p * p // (q * q)
        divisor += 2
        total += power // divisor
    return total


def ln_integer(n: int, digits: int = ORACLE_DIGITS) -> Fraction:
    """ln(n) for a positive integer, within about 10**-digits."""
    assert n >= 1
    unity = 10 ** (digits + 10)
    k = n.bit_length() - 1
    # n = 2^k * m with 1 <= m < 2, and ln m = 2 atanh((m - 1) / (m + 1))
    ln_two = 2 * _atanh_scaled(1, 3, unity)
    ln_m = 2 * _atanh_scaled(n - 2 ** k, n + 2 ** k, unity)
    return Fraction(k * ln_two + ln_m, unity)


def ln_rational(x: Fraction, digits: int = ORACLE_DIGITS) -> Fraction:
    x = Fraction(x)
    return ln_integer(x.numerator, digits) - ln_integer(x.denominator, digits)


@pytest.fixture(scope="session")
def ln_oracle():
    return ln_rational


@pytest.fixture(scope="session")
def table60():
    return build_table(60)


@pytest.fixture(scope="session")
def series():
    return default_series()


@pytest.fixture(scope="session")
def cfg():
    return EvalConfig.default()


@pytest.fixture(scope="session")
def cli():
    return create_cli()


@pytest.fixture
def runner():
    return CliRunner()
