"""Seeded property sampling across all modules, producing a deterministic JSON report.

The report holds no timings or environment data, so equal seeds give
byte-identical output.  A handful of certificates are embedded so that the
report itself can be fed to ``selftest --replay``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from . import report
from .bignat import count_A, from_support, is_member_A, support
from .constructive import (
    construct_blocker,
    jwitness_for_A,
    pigeonhole_select,
    prefix_budget,
    shift_into_A,
)
from .density import convergence_report, partial_product, window_ratio
from .jset import SequencePrefix, verify_witness
from .largeness import WindowSet, syndetic_bound, thick_check
from .padic import ball_difference_valuation, low_valuation_of_pair, ultrametric_check, val
from .replay import member_by_definition


def _check(name: str, cases: int, trial: Callable[[random.Random], tuple[bool, str]], rng: random.Random) -> dict:
    failures = []
    for _ in range(cases):
        ok, detail = trial(rng)
        if not ok and len(failures) < 5:
            failures.append(detail)
    return {"name": name, "cases": cases, "passed": not failures, "failures": failures}


def _membership(rng):
    n = rng.getrandbits(rng.randint(1, 80))
    return is_member_A(n) == member_by_definition(n) and from_support(support(n)) == n, str(n)


def _blocker(rng):
    m = rng.randint(1, 3)
    c = [rng.randrange(1 << 20) for _ in range(m)]
    x = rng.randrange(1 << 30)
    cert = construct_blocker(c, x)
    ok = x < cert.y <= x + cert.n and not any(member_by_definition(cert.y + ck) for ck in c)
    return ok, f"c={c} x={x}"


def _pigeonhole(rng):
    n = rng.randint(1, 2)
    length = prefix_budget(n)
    F = [SequencePrefix(tuple(rng.randrange(-10**6, 10**6) for _ in range(length))) for _ in range(n)]
    cert = pigeonhole_select(F)
    mod = 1 << (n + 1)
    ok = (len(cert.t) == mod and all(a < b for a, b in zip(cert.t, cert.t[1:]))
          and all(sum(f.at(j) for j in cert.t) % mod == 0 for f in F))
    return ok, f"n={n}"


def _shift(rng):
    n = rng.randint(1, 4)
    mod = 1 << (n + 1)
    b = [mod * rng.randrange(-(1 << 24) // mod + 1, (1 << 24) // mod) for _ in range(n)]
    a = shift_into_A(b)
    return all(member_by_definition(a + bi) for bi in b), f"b={b}"


def _jwitness(rng):
    n = rng.randint(1, 2)
    length = prefix_budget(n)
    F = [SequencePrefix.affine(rng.randint(-50, 50), rng.randint(-1000, 1000), length) for _ in range(n)]
    w = jwitness_for_A(F)
    return verify_witness(member_by_definition, F, w), f"n={n}"


def _duality(rng):
    length = rng.randint(8, 200)
    lo = rng.randint(-100, 100)
    p = rng.random()
    X = WindowSet.from_members([x for x in range(lo, lo + length) if rng.random() < p], lo, lo + length)
    g = rng.randint(0, length - 1)
    refuted = thick_check(X, g).refuted
    bound = syndetic_bound(X.complement())
    return refuted == (bound is not None and bound <= g + 1), f"lo={lo} len={length} g={g}"


def _rational(rng) -> Fraction:
    num = rng.randint(-10**6, 10**6)
    den = rng.randint(1, 10**6)
    return Fraction(num, den) * Fraction(rng.choice([2, 3, 5, 7])) ** rng.randint(-5, 5)


def _padic(rng):
    p = rng.choice([2, 3, 5, 7])
    a, b = _rational(rng), _rational(rng)
    ultrametric_check(p, a, b)
    mult = a == 0 or b == 0 or val(p, a * b) == val(p, a) + val(p, b)
    s1, s2 = _rational(rng), _rational(rng)
    if s1 == s2:
        s2 += 1
    which, bound = low_valuation_of_pair(p, a, s1, s2)
    chosen = a + (s1 if which == "first" else s2)
    k = rng.randint(0, 10)
    t = sorted(rng.sample(range(1, 30), rng.randint(1, 5)))
    ball = ball_difference_valuation(p, k, t) == 1 + k + t[0]
    return mult and val(p, chosen) <= bound and ball, f"p={p} a={a} b={b}"


def run_selftest(seed: int, scale: float = 1.0) -> dict:
    def cases(base: int) -> int:
        return max(1, int(base * scale))

    rng = random.Random(seed)
    results = []

    counts = [(d, count_A(d, "brute"), count_A(d, "formula")) for d in range(4)]
    results.append({"name": "count_brute_vs_formula", "cases": 4,
                    "passed": all(b == f for _, b, f in counts),
                    "failures": [f"d={d}" for d, b, f in counts if b != f]})
    rows = convergence_report(3)
    dens_ok = all(partial_product(d) == window_ratio(d) for d in range(4)) and rows[-1].partial > Fraction(7, 20)
    results.append({"name": "density_identity", "cases": 4, "passed": dens_ok, "failures": []})

    results.append(_check("membership_oracle", cases(200), _membership, rng))
    results.append(_check("blocker", cases(100), _blocker, rng))
    results.append(_check("pigeonhole", cases(20), _pigeonhole, rng))
    results.append(_check("shift_into_A", cases(100), _shift, rng))
    results.append(_check("jwitness_for_A", cases(10), _jwitness, rng))
    results.append(_check("thick_syndetic_duality", cases(50), _duality, rng))
    results.append(_check("padic", cases(200), _padic, rng))

    # embedded certificates, drawn from the same stream
    n = rng.getrandbits(32)
    c = sorted(rng.sample(range(8), 2))
    x = rng.randrange(1 << 30)
    b = [8 * rng.randrange(-1000, 1000) for _ in range(2)]
    slope, offset = rng.randint(1, 9), rng.randint(0, 99)
    F = [SequencePrefix.affine(slope, offset, prefix_budget(1))]
    certificates = [
        report.member_payload(n),
        report.blocker_payload(c, [construct_blocker(c, x)]),
        report.shift_payload(b, shift_into_A(b)),
        report.jwitness_payload([{"spec": f"affine:{slope},{offset}", "length": len(F[0])}], F,
                                jwitness_for_A(F)),
        report.largeness_payload("thick", "A", 0, 1024, thick_check(WindowSet.from_predicate(is_member_A, 0, 1024), 15)),
    ]
    return {
        "kind": "selftest",
        "seed": seed,
        "scale": scale,
        "results": results,
        "passed": all(r["passed"] for r in results),
        "certificates": certificates,
    }
