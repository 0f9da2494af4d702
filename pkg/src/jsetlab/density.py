"""Exact density of A on the windows ``[0, 2^(2^(d+1)))``.

All arithmetic is done with :class:`fractions.Fraction`; floats only appear
when formatting.

Tail bound.  For ``0 < x < 1``, ``|log(1 - x)| <= x / (1 - x)``.  With
``x = 2^(-2^k)`` the k-th term is at most ``1 / (2^(2^k) - 1)``.  Consecutive
such terms shrink by the factor ``1 / (2^(2^k) + 1)``, so the tail past d is
majorised by a geometric series with first term ``1 / (N - 1)`` and ratio
``1 / (N + 1)``, where ``N = 2^(2^(d+1))``.  That sums to
``(N + 1) / (N (N - 1))``, which is below ``2 / N``.

The inequality between partial products is shipped in rational form: from
``exp(-T) >= 1 - T`` and ``log P(d) - log P(d') <= T`` we get
``P(d') >= P(d) (1 - T)``, i.e. ``P(d) - P(d') <= P(d) * T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bignat import count_A
from .errors import BudgetExceeded

DEFAULT_D_LIMIT = 16
POSITIVITY_FLOOR = Fraction(7, 20)


def partial_product(d: int, limit: int = DEFAULT_D_LIMIT) -> Fraction:
    """``prod_{k=0}^{d} (1 - 2^(-2^k))`` as an exact rational."""
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if d > limit:
        raise BudgetExceeded("d_limit", limit, d)
    p = Fraction(1)
    for k in range(d + 1):
        den = 1 << (1 << k)
        p *= Fraction(den - 1, den)
    return p


def window_ratio(d: int, limit: int = DEFAULT_D_LIMIT) -> Fraction:
    """``count_A(d) / 2^(2^(d+1))`` via the counting formula."""
    if d > limit:
        raise BudgetExceeded("d_limit", limit, d)
    return Fraction(count_A(d, "formula"), 1 << (1 << (d + 1)))


def tail_bound(d: int) -> Fraction:
    """Upper bound on ``sum_{k>d} |log(1 - 2^(-2^k))|``; see module docstring."""
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    big = 1 << (1 << (d + 1))
    return Fraction(big + 1, big * (big - 1))


def limit_lower_bound(d: int, limit: int = DEFAULT_D_LIMIT) -> Fraction:
    """Rational lower bound ``P(d) * (1 - T(d))`` on the infinite product."""
    return partial_product(d, limit) * (1 - tail_bound(d))


@dataclass(frozen=True)
class ConvergenceRow:
    d: int
    partial: Fraction
    tail_bound: Fraction

    @property
    def limit_lower(self) -> Fraction:
        return self.partial * (1 - self.tail_bound)


def convergence_report(d_max: int, limit: int = DEFAULT_D_LIMIT) -> list[ConvergenceRow]:
    """Rows for d = 0..d_max, with the monotonicity and positivity claims checked.

    Raises ``ArithmeticError`` if a check fails (it should not).
    """
    if d_max > limit:
        raise BudgetExceeded("d_limit", limit, d_max)
    rows = [ConvergenceRow(d, partial_product(d, limit), tail_bound(d)) for d in range(d_max + 1)]
    for prev, cur in zip(rows, rows[1:]):
        if not (cur.partial < prev.partial and cur.tail_bound < prev.tail_bound):
            raise ArithmeticError(f"monotone decrease fails between d={prev.d} and d={cur.d}")
    for row in rows:
        if row.d >= 3 and not row.limit_lower > POSITIVITY_FLOOR:
            raise ArithmeticError(f"limit lower bound at d={row.d} is not above {POSITIVITY_FLOOR}")
    return rows


def format_fraction(q: Fraction, digits: int = 8) -> str:
    return f"{q.numerator}/{q.denominator} (~{float(q):.{digits}g})"
