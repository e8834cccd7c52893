"""
Bernoulli package.

Coefficients of the log Gamma expansion, the Bernoulli numbers extracted
from them, and the `bernoulli` command.
"""

from .algorithms import BernoulliTable, bernoulli_number, bernoulli_oracle, build_table

__all__ = ["BernoulliTable", "bernoulli_number", "bernoulli_oracle", "build_table"]
