import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from jsetlab.padic import (
    PAdicRational,
    ball_difference_valuation,
    low_valuation_of_pair,
    ultrametric_check,
    val,
)

primes = st.sampled_from([2, 3, 5, 7])
rationals = st.fractions(max_denominator=10 ** 6).filter(lambda q: abs(q) < 10 ** 9)
nonzero = rationals.filter(lambda q: q != 0)


def test_val_examples():
    assert val(2, 12) == 2
    assert val(3, Fraction(9, 2)) == 2
    assert val(5, 0) == math.inf
    assert val(2, Fraction(3, 8)) == -3
    with pytest.raises(ValueError):
        val(4, 12)


def test_padic_rational():
    q = PAdicRational(3, Fraction(-45, 7))
    assert q.valuation == 2 and q.unit == Fraction(-5, 7)
    assert q.in_valuation_ring()
    assert not PAdicRational(3, Fraction(1, 9)).in_valuation_ring()
    assert PAdicRational(5, 0).valuation == math.inf


def test_ultrametric_examples():
    r = ultrametric_check(2, 4, 2)
    assert (r.v_a, r.v_b, r.v_sum) == (2, 1, 1) and r.sharp
    r = ultrametric_check(2, 2, 2)
    assert r.v_sum == 2 > min(r.v_a, r.v_b) and not r.sharp


def test_low_valuation_examples():
    assert low_valuation_of_pair(3, 0, 3, 9) == ("first", 1)
    assert low_valuation_of_pair(3, -3, 3, 9) == ("second", 1)
    with pytest.raises(ValueError):
        low_valuation_of_pair(3, 1, 2, 2)


@pytest.mark.parametrize("p, k, t, expected", [(2, 0, (1,), 2), (2, 1, (2, 5), 4), (3, 0, (1, 2, 3), 2)])
def test_ball_examples(p, k, t, expected):
    assert ball_difference_valuation(p, k, t) == expected


def test_ball_direct_computation():
    # 2^4 + 2^7 - 2^5 - 2^8 = -144 = -2^4 * 9
    assert 2 ** 4 + 2 ** 7 - 2 ** 5 - 2 ** 8 == -144
    with pytest.raises(ValueError):
        ball_difference_valuation(2, 0, ())
    with pytest.raises(ValueError):
        ball_difference_valuation(2, 0, (3, 2))


@given(primes, nonzero, nonzero)
def test_multiplicativity(p, q, r):
    assert val(p, q * r) == val(p, q) + val(p, r)


@given(primes, rationals, rationals)
def test_ultrametric_law(p, a, b):
    r = ultrametric_check(p, a, b)
    assert r.v_sum >= min(r.v_a, r.v_b)
    if r.v_a != r.v_b:
        assert r.v_sum == min(r.v_a, r.v_b)


@given(primes, rationals, rationals, rationals)
def test_low_valuation_bound(p, a, s1, s2):
    assume(s1 != s2)
    which, bound = low_valuation_of_pair(p, a, s1, s2)
    chosen = a + (s1 if which == "first" else s2)
    assert val(p, chosen) <= bound == val(p, s1 - s2)
    assert min(val(p, a + s1), val(p, a + s2)) <= bound


@given(primes, rationals, rationals)
def test_low_valuation_tight(p, s1, s2):
    assume(s1 != s2)
    which, bound = low_valuation_of_pair(p, -s2, s1, s2)
    assert which == "first" and val(p, s1 - s2) == bound


@given(primes, st.integers(0, 20), st.lists(st.integers(1, 40), min_size=1, max_size=6, unique=True))
def test_ball_identity(p, k, t):
    t = sorted(t)
    assert ball_difference_valuation(p, k, t) == 1 + k + t[0]
