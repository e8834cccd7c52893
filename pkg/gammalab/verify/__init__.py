"""
Verify package.

Exact Gamma values at integers and half-integers, recovery of the constant
C, truncation-error studies, and the `cestimate` and `error-profile`
commands.
"""

from .algorithms import (
    CEstimate,
    ConvergenceRow,
    HalfIntegerValue,
    convergence_study,
    estimate_C,
    gamma_reference,
    half_integer_exact,
    integer_exact,
    log_gamma_reference,
)
from .services import (
    ErrorProfileRow,
    ErrorStudyService,
    asymptotic_order_slope,
    error_profile,
    true_error,
)

__all__ = [
    "CEstimate",
    "ConvergenceRow",
    "ErrorProfileRow",
    "ErrorStudyService",
    "HalfIntegerValue",
    "asymptotic_order_slope",
    "convergence_study",
    "error_profile",
    "estimate_C",
    "gamma_reference",
    "half_integer_exact",
    "integer_exact",
    "log_gamma_reference",
    "true_error",
]
