"""
Stirling package.

The log Gamma asymptotic series, its truncation policy and error estimate,
and the `coeffs` command.
"""

from .algorithms import (
    FIXED,
    SMALLEST_TERM,
    StirlingSeries,
    TruncationPolicy,
    build_series,
    error_estimate,
    eval_log_gamma_decimal,
    eval_log_gamma_raw,
    expansion_coefficient,
    smallest_term_index,
)

__all__ = [
    "FIXED",
    "SMALLEST_TERM",
    "StirlingSeries",
    "TruncationPolicy",
    "build_series",
    "error_estimate",
    "eval_log_gamma_decimal",
    "eval_log_gamma_raw",
    "expansion_coefficient",
    "smallest_term_index",
]
