"""
Exact arithmetic for gammalab.

This module is the bottom layer of the library. Everything that must be
exact (series coefficients, Bernoulli numbers, factorials, the rational
multiples of sqrt(pi) at half-integers) is built from the types here, and
the high-precision constants sqrt(pi) and sqrt(2 pi) come from here too.

Key concepts:
- ExactInteger: a Python int. Arbitrary precision, no leading zeros, and
  zero has a single representation.
- ExactRational: a fractions.Fraction. Numerator and denominator are always
  coprime and the denominator is always positive, after every operation.
- HighPrecisionDecimal: a finite decimal expansion of a real number together
  with the number of significant digits it carries.
"""

import math
import operator
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Union

from gammalab.config import Config
from gammalab.errors import DomainError

ExactInteger = int
ExactRational = Fraction
RationalLike = Union[int, Fraction]

# Extra digits carried by the fixed-point arctangent sums
_GUARD_DIGITS = 10

_OPERATIONS: Dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


@dataclass(frozen=True)
class HighPrecisionDecimal:
    """
    A decimal approximation with a known number of correct digits.

    The error of the stored value is at most half a unit in the last stored
    digit.

    Attributes:
        value (Decimal): the expansion (exact, no context rounding)
        digits (int): number of significant digits in value
    """

    value: Decimal
    digits: int

    @property
    def digit_string(self) -> str:
        """The significant digits without sign, point or exponent."""
        return "".join(str(d) for d in self.value.as_tuple().digits)

    @property
    def exponent(self) -> int:
        """Power of ten of the last stored digit."""
        return self.value.as_tuple().exponent

    def to_fraction(self) -> Fraction:
        return Fraction(self.value)

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return str(self.value)


def rational_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    """
    Apply one of add, sub, mul, div to two exact rationals.

    Args:
        a (int or Fraction): left operand
        b (int or Fraction): right operand
        op (str): "add", "sub", "mul" or "div"

    Returns:
        Fraction: the exact result in canonical form

    Raises:
        DomainError: for an unknown operation or division by zero
    """
    func = _OPERATIONS.get(op)
    if func is None:
        raise DomainError(f"Unknown operation {op!r}; expected one of {', '.join(_OPERATIONS)}")

    left, right = Fraction(a), Fraction(b)
    if op == "div" and right == 0:
        raise DomainError(f"Division by zero: {left} / 0")
    return func(left, right)


def factorial(n: int) -> ExactInteger:
    """Exact n! for n >= 0."""
    if n < 0:
        raise DomainError(f"factorial is undefined for negative n ({n})")
    return math.factorial(n)


def _isqrt_scaled(x: Fraction, scale: int) -> int:
    """floor(sqrt(x) * 10**scale), by integer Newton iteration on floor(x * 10**(2*scale))."""
    if scale >= 0:
        radicand = x.numerator * 10 ** (2 * scale) // x.denominator
    else:
        radicand = x.numerator // (x.denominator * 10 ** (-2 * scale))
    return math.isqrt(radicand)


def sqrt_decimal(x: RationalLike, digits: int) -> HighPrecisionDecimal:
    """
    Square root of a positive rational to a requested number of significant digits.

    The root is computed with math.isqrt (integer Newton iteration) on the
    scaled radicand with one guard digit, then rounded to nearest, so the
    error is at most half a unit in the last stored digit.

    Args:
        x (int or Fraction): the radicand, must be positive
        digits (int): number of significant digits wanted (>= 1)

    Returns:
        HighPrecisionDecimal: sqrt(x) rounded to `digits` significant digits

    Raises:
        DomainError: if x <= 0 or digits < 1
    """
    x = Fraction(x)
    if x <= 0:
        raise DomainError(f"sqrt_decimal needs x > 0, got {x}")
    if digits < 1:
        raise DomainError(f"digits must be positive, got {digits}")

    # First guess: `digits` places after the point, then correct the scale
    # until the root has exactly `digits` significant digits.
    scale = digits
    while True:
        root = _isqrt_scaled(x, scale)
        if root == 0:
            scale += digits
            continue
        excess = len(str(root)) - digits
        if excess == 0:
            break
        scale -= excess

    # Round half up from one guard digit; floor(sqrt) then +5 // 10 is exact rounding
    root = (_isqrt_scaled(x, scale + 1) + 5) // 10
    if len(str(root)) > digits:
        # carried into a new leading digit (e.g. 9.9996 -> 10.000)
        root //= 10
        scale -= 1

    # Decimal built from a string is exact: no context precision is applied
    return HighPrecisionDecimal(value=Decimal(f"{root}E{-scale}"), digits=digits)


def arccot_fixed(x: int, unity: int) -> int:
    """
    arccot(x) scaled by `unity`, in fixed-point integer arithmetic.

    Sums the alternating series of atan(1/x). Each term is truncated, so the
    result is off by at most a few units per term.
    """
    total = power = unity // x
    x_squared = x * x
    divisor = 1
    sign = 1
    while power:
        power //= x_squared
        divisor += 2
        sign = -sign
        total += sign * (power // divisor)
    return total


@lru_cache(maxsize=None)
def pi_rational(digits: int = Config.PI_DIGITS) -> Fraction:
    """
    pi as an exact rational, truncated to `digits` decimal places.

    Uses Machin's formula pi = 16 arccot(5) - 4 arccot(239). The value for
    each digit count is computed once and cached.
    """
    if digits < 1:
        raise DomainError(f"digits must be positive, got {digits}")
    unity = 10 ** (digits + _GUARD_DIGITS)
    pi_scaled = 4 * (4 * arccot_fixed(5, unity) - arccot_fixed(239, unity))
    return Fraction(pi_scaled // 10 ** _GUARD_DIGITS, 10 ** digits)


def _pi_for(digits: int) -> Fraction:
    # pi carries at least 10 more digits than any root taken from it
    return pi_rational(max(Config.PI_DIGITS, digits + _GUARD_DIGITS))


@lru_cache(maxsize=None)
def sqrt_pi(digits: int = Config.ORACLE_DIGITS) -> HighPrecisionDecimal:
    """sqrt(pi) = Gamma(1/2) to `digits` significant digits."""
    return sqrt_decimal(_pi_for(digits), digits)


@lru_cache(maxsize=None)
def sqrt_two_pi(digits: int = Config.ORACLE_DIGITS) -> HighPrecisionDecimal:
    """sqrt(2 pi), the Stirling constant C, to `digits` significant digits."""
    return sqrt_decimal(2 * _pi_for(digits), digits)


@lru_cache(maxsize=None)
def half_log_two_pi() -> float:
    """log C = log(sqrt(2 pi)) in double precision."""
    return math.log(float(sqrt_two_pi(Config.ORACLE_DIGITS)))
