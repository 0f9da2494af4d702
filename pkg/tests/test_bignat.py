import pytest
from hypothesis import given, strategies as st

from jsetlab.bignat import (
    BigNatural,
    block,
    count_A,
    from_support,
    full_block_witness,
    is_member_A,
    support,
)
from jsetlab.errors import BudgetExceeded

from oracles import count_window, member_A, supp

naturals = st.integers(min_value=0, max_value=2 ** 300)


@pytest.mark.parametrize("n, expected", [(0, ()), (6, (1, 2)), (108, (2, 3, 5, 6))])
def test_support_examples(n, expected):
    assert support(n) == expected


@pytest.mark.parametrize("k, expected", [(0, [1]), (1, [2, 3]), (3, list(range(8, 16)))])
def test_block_examples(k, expected):
    b = block(k)
    assert list(b) == expected
    assert len(b) == 2 ** k
    assert b.lo == 2 ** k and b.hi == 2 ** (k + 1) - 1


@pytest.mark.parametrize("n, expected", [(5, True), (2, False), (12, False), (0, True), (-3, False)])
def test_is_member_A_examples(n, expected):
    assert is_member_A(n) is expected


@pytest.mark.parametrize("n, expected", [(12, 1), (2, 0), (5, None)])
def test_full_block_witness_examples(n, expected):
    assert full_block_witness(n) == expected


def test_count_A_exact_values():
    # frozen from tests/oracles.count_window
    assert [count_window(d) for d in range(3)] == [2, 6, 90]
    for d, expected in enumerate([2, 6, 90, 22950]):
        assert count_A(d, "formula") == expected
        assert count_A(d, "brute") == expected


def test_count_A_budget():
    with pytest.raises(BudgetExceeded) as exc:
        count_A(4, "brute")
    assert exc.value.bound == "scan_budget"
    with pytest.raises(ValueError):
        count_A(2, "guess")


def test_bignatural_bits():
    n = BigNatural(108)
    assert [n.bit(i) for i in range(8)] == [0, 0, 1, 1, 0, 1, 1, 0]
    assert n.bit(10 ** 6) == 0
    assert n.with_bit(0, 1).value == 109
    assert n.with_bit(2, 0).value == 104
    assert BigNatural.from_support(n.support()) == n
    assert is_member_A(BigNatural(5))
    with pytest.raises(ValueError):
        BigNatural(-1)


@given(naturals)
def test_support_matches_oracle_and_round_trips(n):
    s = support(n)
    assert list(s) == sorted(supp(n))
    assert from_support(s) == n
    assert (len(s) == 0) == (n == 0)


@given(st.integers(min_value=-2 ** 70, max_value=2 ** 70))
def test_membership_matches_definition(n):
    assert is_member_A(n) == member_A(n)


@given(naturals)
def test_member_iff_no_full_block(n):
    assert is_member_A(n) == (full_block_witness(n) is None)


@given(naturals)
def test_witness_block_is_really_full(n):
    k = full_block_witness(n)
    if k is not None:
        assert set(block(k)) <= supp(n)
        assert all(not set(block(j)) <= supp(n) for j in range(k))


@given(st.integers(min_value=0, max_value=2 ** 200))
def test_two_mod_four_is_outside(n):
    assert not is_member_A(4 * n + 2)


@given(st.integers(min_value=0, max_value=4), st.integers(min_value=0, max_value=2 ** 40),
       st.integers(min_value=0, max_value=2 ** 40))
def test_block_locality(d, low, high_a):
    # numbers agreeing mod 2^(2^(d+1)) agree on fullness of B_0..B_d
    window = 2 ** 2 ** (d + 1)
    r = low % window
    n, m = r + window * high_a, r + window * (high_a + 1)
    for k in range(d + 1):
        assert (set(block(k)) <= supp(n)) == (set(block(k)) <= supp(m))
