"""
Bernoulli number generation for gammalab.

The coefficients c_j of the successive-substitution expansion of log Gamma
satisfy

    c_0 = 1,    c_j = - sum_{k=0}^{j-1} c_k / (j - k + 1)!    (j >= 1)

and B_j = j! c_j are the Bernoulli numbers. This module builds the c_j by
that literal recursion, extracts the B_j, and provides an independent
oracle (an explicit double sum) that shares no code with the recursion.

Convention: the recursion gives B_1 = -1/2, and that is used everywhere.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Tuple

from gammalab.errors import DomainError
from gammalab.exactnum import factorial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BernoulliTable:
    """
    Immutable table of c_0..c_J and B_0..B_J.

    Attributes:
        c (tuple of Fraction): recursion coefficients, c[j] = B_j / j!
        B (tuple of Fraction): Bernoulli numbers, B[j] = j! c[j]
    """

    c: Tuple[Fraction, ...]
    B: Tuple[Fraction, ...]

    @property
    def max_index(self) -> int:
        """Largest index J held by the table."""
        return len(self.c) - 1

    def __len__(self) -> int:
        return len(self.c)


def build_table(max_index: int) -> BernoulliTable:
    """
    Build c_0..c_J by the recursion and B_0..B_J from them.

    The whole table is filled eagerly; nothing is computed lazily later.

    Args:
        max_index (int): J, the largest index to compute (>= 0)

    Returns:
        BernoulliTable: the completed table
    """
    if max_index < 0:
        raise DomainError(f"max_index must be >= 0, got {max_index}")

    # 1/m! for m = 0 .. J+1, the denominators of the recursion
    inverse_factorials = [Fraction(1, factorial(m)) for m in range(max_index + 2)]

    c: List[Fraction] = [Fraction(1)]
    for j in range(1, max_index + 1):
        total = sum(
            (c[k] * inverse_factorials[j - k + 1] for k in range(j)),
            Fraction(0),
        )
        c.append(-total)

    B = [factorial(j) * c_j for j, c_j in enumerate(c)]
    logger.debug(f"Built Bernoulli table up to J={max_index}")
    return BernoulliTable(c=tuple(c), B=tuple(B))


def bernoulli_number(table: BernoulliTable, j: int) -> Fraction:
    """Return B_j from a built table (IndexError when j is outside 0..J)."""
    if not 0 <= j <= table.max_index:
        raise IndexError(f"Bernoulli index {j} outside table range 0..{table.max_index}")
    return table.B[j]


def bernoulli_oracle(m: int) -> Fraction:
    """
    B_m from the explicit double sum, independent of the recursion.

        B_m = sum_{k=0}^{m} 1/(k+1) sum_{j=0}^{k} (-1)^j C(k, j) j^m

    With 0^0 = 1 this sum gives B_1 = -1/2, the same convention as the
    recursion.

    Args:
        m (int): index (>= 0)

    Returns:
        Fraction: B_m exactly
    """
    if m < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {m}")

    result = Fraction(0)
    for k in range(m + 1):
        # The inner sum is an integer (a scaled Stirling number of the second kind)
        inner = sum((-1) ** j * comb(k, j) * j ** m for j in range(k + 1))
        result += Fraction(inner, k + 1)
    return result
