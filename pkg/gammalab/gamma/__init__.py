"""
Gamma package.

User-facing log Gamma / Gamma evaluation with argument reduction, and the
`eval` and `table` commands.
"""

from .algorithms import (
    EvalConfig,
    EvalResult,
    default_series,
    gamma,
    log_gamma,
    recursion_residual,
    shift_for,
)

__all__ = [
    "EvalConfig",
    "EvalResult",
    "default_series",
    "gamma",
    "log_gamma",
    "recursion_residual",
    "shift_for",
]
