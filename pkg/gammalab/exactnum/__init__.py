# Exact integer/rational arithmetic and high-precision constants
from .algorithms import (
    ExactInteger,
    ExactRational,
    HighPrecisionDecimal,
    RationalLike,
    arccot_fixed,
    factorial,
    half_log_two_pi,
    pi_rational,
    rational_arith,
    sqrt_decimal,
    sqrt_pi,
    sqrt_two_pi,
)

__all__ = [
    "ExactInteger",
    "ExactRational",
    "HighPrecisionDecimal",
    "RationalLike",
    "arccot_fixed",
    "factorial",
    "half_log_two_pi",
    "pi_rational",
    "rational_arith",
    "sqrt_decimal",
    "sqrt_pi",
    "sqrt_two_pi",
]
