import pytest
from hypothesis import given, strategies as st

from jsetlab.bignat import is_member_A
from jsetlab.constructive import jwitness_for_A, prefix_budget
from jsetlab.jset import (
    INTEGERS,
    JWitness,
    SearchBounds,
    SequencePrefix,
    brute_witness_search,
    centered,
    chi,
    chi_reduced,
    free_group_words,
    shift_witness,
    verify_witness,
)

identity_seq = SequencePrefix(tuple(range(1, 41)))
everything = lambda x: True  # noqa: E731
nothing = lambda x: False  # noqa: E731


def test_chi_examples():
    assert chi(JWitness(1, (0, 0), (1,)), SequencePrefix((7, 1, 2))) == 7
    assert chi(JWitness(2, (3, 4, 1), (2, 5)), identity_seq) == 15
    assert chi(JWitness.reduced(2, (1, 3)), identity_seq) == 6


def test_chi_index_out_of_range():
    with pytest.raises(IndexError):
        chi(JWitness(1, (0, 0), (5,)), SequencePrefix((1, 2)))


def test_witness_shape_validation():
    with pytest.raises(ValueError):
        JWitness(2, (0, 0), (1, 2))
    with pytest.raises(ValueError):
        JWitness(2, (0, 0, 0), (2, 2))
    with pytest.raises(ValueError):
        JWitness(1, (0, 0), (0,))
    with pytest.raises(ValueError):
        SequencePrefix(())


def test_noncommutative_chi_keeps_order():
    G = free_group_words()
    x, y, z = (("x", 1),), (("y", 1),), (("z", 1),)
    f = SequencePrefix((y, z))
    w = JWitness(2, (x, G.inv(x), x), (1, 2))
    assert chi(w, f, G) == (("x", 1), ("y", 1), ("x", -1), ("z", 1), ("x", 1))


def test_verify_witness_examples():
    w = JWitness(2, (3, 4, 1), (2, 5))
    assert verify_witness(everything, [identity_seq], w)
    assert not verify_witness(nothing, [identity_seq], w)
    F = [SequencePrefix.affine(1, 0, prefix_budget(1))]
    assert verify_witness(is_member_A, F, jwitness_for_A(F))


def test_brute_search_examples():
    assert brute_witness_search(everything, [identity_seq]) == JWitness(1, (0, 0), (1,))
    assert brute_witness_search(nothing, [identity_seq], SearchBounds(m_max=3, a_range=5)) is None
    F = [identity_seq, SequencePrefix(tuple(3 * j + 1 for j in range(1, 41)))]
    w = brute_witness_search(is_member_A, F, SearchBounds(m_max=2, a_range=32))
    assert w is not None and verify_witness(is_member_A, F, w)


def test_brute_search_full_box_agrees_with_reduced():
    F = [SequencePrefix((2, 3, 6, 7)), SequencePrefix((10, 11, 14, 15))]
    target = lambda x: x % 16 == 9  # noqa: E731
    w_full = brute_witness_search(target, F, SearchBounds(m_max=2, a_range=4, reduced=False))
    w_red = brute_witness_search(target, F, SearchBounds(m_max=2, a_range=8, reduced=True))
    assert w_full is not None and w_red is not None
    assert verify_witness(target, F, w_full) and verify_witness(target, F, w_red)


def test_centered_order():
    assert list(centered(2)) == [0, 1, -1, 2, -2]


def test_shift_witness_examples():
    w = JWitness(1, (0, 0), (1,))
    assert chi(shift_witness(w, 0), SequencePrefix((7,))) == chi(w, SequencePrefix((7,)))
    assert chi(shift_witness(w, 5), SequencePrefix((7,))) == 12


seqs = st.lists(st.integers(-1000, 1000), min_size=6, max_size=12).map(lambda v: SequencePrefix(tuple(v)))


@st.composite
def witnesses(draw, length=6):
    m = draw(st.integers(1, 4))
    t = sorted(draw(st.sets(st.integers(1, length), min_size=m, max_size=m)))
    a = draw(st.lists(st.integers(-100, 100), min_size=m + 1, max_size=m + 1))
    return JWitness(m, a, t)


@given(witnesses(), seqs)
def test_general_and_reduced_chi_agree(w, f):
    assert chi(w, f, INTEGERS) == chi_reduced(w, f)


@given(witnesses(), seqs, st.integers(-10 ** 6, 10 ** 6))
def test_shift_covariance(w, f, g):
    assert chi(shift_witness(w, g), f) == g + chi(w, f)


@given(witnesses(), st.lists(seqs, min_size=1, max_size=3), st.integers(-500, 500),
       st.integers(2, 7), st.integers(0, 6))
def test_translates_inherit_witnesses(w, F, g, q, r):
    X = lambda x: x % q == r % q  # noqa: E731
    gX = lambda x: X(x - g)  # noqa: E731
    if verify_witness(X, F, w):
        assert verify_witness(gX, F, shift_witness(w, g))


@given(st.lists(seqs, min_size=1, max_size=2), st.integers(2, 9), st.integers(0, 8))
def test_search_is_sound_and_monotone(F, q, r):
    X = lambda x: x % q == r % q  # noqa: E731
    small = brute_witness_search(X, F, SearchBounds(m_max=1, a_range=2))
    large = brute_witness_search(X, F, SearchBounds(m_max=2, a_range=5))
    if small is not None:
        assert verify_witness(X, F, small)
        assert large is not None
    if large is not None:
        assert verify_witness(X, F, large)
