"""p-adic valuations on exact rationals.

Rationals with the p-adic valuation stand in for a p-adically closed field;
only valuation-level identities are computed.  ``val`` returns ``math.inf``
for zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from sympy import isprime

Rational = Union[int, Fraction]
INF = math.inf


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")


def _int_val(p: int, n: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def val(p: int, q: Rational):
    _require_prime(p)
    q = Fraction(q)
    if q == 0:
        return INF
    return _int_val(p, abs(q.numerator)) - _int_val(p, q.denominator)


@dataclass(frozen=True)
class PAdicRational:
    p: int
    value: Fraction

    def __post_init__(self):
        _require_prime(self.p)
        object.__setattr__(self, "value", Fraction(self.value))

    @property
    def valuation(self):
        return val(self.p, self.value)

    @property
    def unit(self) -> Fraction:
        """``value / p^valuation``; numerator and denominator prime to p."""
        if self.value == 0:
            raise ZeroDivisionError("zero has no unit part")
        return self.value / Fraction(self.p) ** self.valuation

    def in_valuation_ring(self) -> bool:
        return self.valuation >= 0


@dataclass(frozen=True)
class UltrametricReport:
    v_a: float
    v_b: float
    v_sum: float

    @property
    def holds(self) -> bool:
        lo = min(self.v_a, self.v_b)
        if self.v_a != self.v_b:
            return self.v_sum == lo
        return self.v_sum >= lo

    @property
    def sharp(self) -> bool:
        """True when unequal valuations force ``v(a+b) = min``."""
        return self.v_a != self.v_b


def ultrametric_check(p: int, a: Rational, b: Rational) -> UltrametricReport:
    report = UltrametricReport(val(p, a), val(p, b), val(p, Fraction(a) + Fraction(b)))
    if not report.holds:
        raise ArithmeticError(f"ultrametric law fails for p={p}, a={a}, b={b}: {report}")
    return report


def low_valuation_of_pair(p: int, a: Rational, s1: Rational, s2: Rational) -> tuple[str, int]:
    """Pick one of ``a + s1``, ``a + s2`` with valuation at most ``v(s1 - s2)``.

    Their difference is ``s1 - s2``, so both exceeding that valuation would
    contradict the ultrametric law.
    """
    if Fraction(s1) == Fraction(s2):
        raise ValueError("s1 and s2 must differ")
    a, s1, s2 = Fraction(a), Fraction(s1), Fraction(s2)
    bound = val(p, s1 - s2)
    if val(p, a + s1) <= bound:
        return "first", bound
    if val(p, a + s2) <= bound:
        return "second", bound
    raise ArithmeticError("neither element meets the valuation bound")


def ball_difference_valuation(p: int, k: int, t: Sequence[int]) -> int:
    """``v(s_1 - s_2)`` for ``s_i = sum_{j∈t} p^(i+j+k)``; always ``1 + k + t[0]``.

    The difference is ``(1 - p) sum_j p^(1+j+k)``; the j = t[0] term has
    strictly smallest valuation and ``1 - p`` is a unit.
    """
    _require_prime(p)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if not t or t[0] < 1 or any(x >= y for x, y in zip(t, t[1:])):
        raise ValueError(f"t must be a nonempty strictly increasing tuple of indices >= 1, got {t}")
    s1 = sum(p ** (1 + j + k) for j in t)
    s2 = sum(p ** (2 + j + k) for j in t)
    v = val(p, s1 - s2)
    if v != 1 + k + t[0]:
        raise ArithmeticError(f"dominant-term identity fails: v={v}, expected {1 + k + t[0]}")
    return v
