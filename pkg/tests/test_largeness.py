import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jsetlab.bignat import is_member_A
from jsetlab.constructive import refute_piecewise_syndetic
from jsetlab.errors import WindowError
from jsetlab.largeness import (
    WindowSet,
    cover_with_translates,
    pws_check,
    syndetic_bound,
    thick_check,
    translate_union,
)
from jsetlab.replay import replay_payload
from jsetlab.report import largeness_payload

from oracles import exhaustive_cover, longest_run, member_A

evens = WindowSet.from_predicate(lambda x: x % 2 == 0, 0, 100)
full = WindowSet.from_predicate(lambda x: True, 0, 100)


def replays(check, spec, X, verdict):
    return replay_payload(largeness_payload(check, spec, X.lo, X.hi, verdict)) == []


def test_window_rejects_outside_queries():
    assert 4 in evens and 5 not in evens
    with pytest.raises(WindowError):
        100 in evens
    with pytest.raises(WindowError):
        WindowSet(3, 3, np.zeros(0, bool))


def test_syndetic_examples():
    assert syndetic_bound(evens) == 2
    assert syndetic_bound(full) == 1
    assert syndetic_bound(WindowSet.from_members([], 0, 10)) is None
    XA = WindowSet.from_predicate(is_member_A, 0, 65536)
    expected = longest_run(not member_A(x) for x in range(65536)) + 1
    assert syndetic_bound(XA) == expected


def test_thick_examples():
    v = thick_check(full, 50)
    assert v.confirmed and replays("thick", "all", full, v)
    v = thick_check(evens, 1)
    assert v.refuted and replays("thick", "evens", evens, v)
    XA = WindowSet.from_predicate(is_member_A, 0, 4096)
    v = thick_check(XA, 15)
    assert v.refuted and replays("thick", "A", XA, v)
    assert all(not member_A(h) for h in v.certificate["holes"])
    with pytest.raises(WindowError):
        thick_check(evens, 100)


def test_pws_examples():
    v = pws_check(evens, [[0, 1]], 50)
    assert v.confirmed and replays("pws", "evens", evens, v)
    single = WindowSet.from_members([0], -500, 500)
    small = [list(h) for r in (1, 2, 3) for h in itertools.combinations(range(6), r)]
    v = pws_check(single, small, 10)
    assert v.refuted and replays("pws", "mod:1000000:0", single, v)
    assert pws_check(evens, [], 5).status == "inconclusive"


def test_pws_on_A_agrees_with_constructive_blockers():
    XA = WindowSet.from_predicate(is_member_A, 0, 2 ** 12 + 8)
    cands = [list(h) for r in (1, 2, 3) for h in itertools.combinations(range(8), r)]
    v = pws_check(XA, cands, 255)
    assert v.refuted and replays("pws", "A", XA, v)
    for cert in v.certificate["per_H"]:
        H = cert["H"]
        U = translate_union(XA, H)
        for b in refute_piecewise_syndetic(H, range(0, 2 ** 12 - 300, 97)):
            if U.lo <= b.y < U.hi:
                assert b.y not in U


def test_cover_examples():
    assert cover_with_translates(full, 1, 5) == [0]
    assert sorted(cover_with_translates(evens, 2, 3)) == [0, 1]
    assert cover_with_translates(evens, 1, 3) is None
    XA = WindowSet.from_predicate(is_member_A, -64, 4096 + 64)
    for k in (1, 2, 3):
        assert cover_with_translates(XA, k, 64) is None
    with pytest.raises(WindowError):
        cover_with_translates(evens, 2, 50)


def test_cover_greedy_beyond_exact_range():
    X = WindowSet.from_predicate(lambda x: x % 5 == 0, 0, 200)
    gs = cover_with_translates(X, 6, 8)
    assert gs is not None and len(gs) == 6
    assert all(any((y - g) % 5 == 0 for g in gs) for y in range(8, 192))


@st.composite
def windows(draw, max_len=120):
    lo = draw(st.integers(-200, 200))
    length = draw(st.integers(4, max_len))
    bits = draw(st.lists(st.booleans(), min_size=length, max_size=length))
    return WindowSet(lo, lo + length, np.array(bits, dtype=bool))


@given(windows(), st.data())
def test_thick_syndetic_duality(X, data):
    g = data.draw(st.integers(0, len(X) - 1))
    refuted = thick_check(X, g).refuted
    bound = syndetic_bound(X.complement())
    assert refuted == (bound is not None and bound <= g + 1)


@given(windows(), st.data())
def test_thick_matches_run_oracle_and_replays(X, data):
    g = data.draw(st.integers(0, len(X) - 1))
    v = thick_check(X, g)
    assert v.confirmed == (longest_run(X.bits.tolist()) >= g + 1)
    members = ",".join(str(m) for m in X.members()) or str(X.hi + 10 ** 6)
    spec = f"mod:{10 ** 7}:{members}"
    assert replays("thick", spec, X, v)


@given(windows(max_len=80), st.data())
def test_pws_replays_and_confirmation_is_monotone(X, data):
    cands = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=1, max_size=3), min_size=1, max_size=4))
    extra = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=1, max_size=3), max_size=3))
    span = data.draw(st.integers(0, 8))
    if len(X) - 6 <= span:
        return
    v = pws_check(X, cands, span)
    members = ",".join(str(m) for m in X.members()) or str(X.hi + 10 ** 6)
    assert replays("pws", f"mod:{10 ** 7}:{members}", X, v)
    if v.confirmed:
        assert pws_check(X, cands + extra, span).confirmed


@given(windows(max_len=60), st.integers(1, 3), st.integers(0, 5))
def test_cover_exact_against_enumeration(X, k, R):
    if len(X) <= 2 * R:
        return
    found = cover_with_translates(X, k, R)
    oracle = exhaustive_cover(set(X.members().tolist()), X.lo, X.hi, k, R)
    assert (found is None) == (oracle is None)
    if found is not None:
        assert len(found) == k and len(set(found)) == k
        assert all(any(X.bits[y - g - X.lo] for g in found) for y in range(X.lo + R, X.hi - R))


@given(windows(max_len=60), st.integers(1, 3), st.integers(0, 4))
def test_cover_confirmation_survives_larger_shift_range(X, k, R):
    if len(X) <= 2 * (R + 1):
        return
    if cover_with_translates(X, k, R) is not None:
        assert cover_with_translates(X, k, R + 1) is not None
