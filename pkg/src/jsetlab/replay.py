"""Re-validate CLI payloads from raw membership queries only.

Nothing here calls the construction or search code.  Membership in A is
re-derived from the binary string of each number, independently of
:mod:`jsetlab.bignat`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .sets import parse_sequence, parse_set

Predicate = Callable[[int], bool]


def member_by_definition(n: int) -> bool:
    """Every block ``B_k`` misses at least one 1-bit of n (naturals only)."""
    if n < 0:
        return False
    bits = bin(n)[2:][::-1]
    k = 0
    while (1 << (k + 1)) <= len(bits):
        if set(bits[1 << k: 1 << (k + 1)]) == {"1"}:
            return False
        k += 1
    return True


def block_full_by_definition(n: int, k: int) -> bool:
    """``B_k ⊆ supp(n)``, read off the low ``2^(k+1)`` bits (two's complement for n < 0)."""
    low = n % (1 << (1 << (k + 1)))
    bits = format(low, "b").zfill(1 << (k + 1))[::-1]
    return set(bits[1 << k: 1 << (k + 1)]) == {"1"}


def _frac(s: str) -> Fraction:
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def _covers_blocks(holes: list[int], lo: int, hi: int, span: int) -> bool:
    """Every ``[s, s + span]`` with ``lo <= s <= hi - span - 1`` contains a hole."""
    hs = sorted(holes)
    if any(not lo <= h < hi for h in hs):
        return False
    cur, last = lo, hi - span - 1
    for h in hs:
        if cur > last:
            break
        if h > cur + span:
            return False
        cur = max(cur, h + 1)
    return cur > last


def _replay_member(p: dict, errs: list[str]) -> None:
    n = int(p["n"])
    if p["in_A"] != member_by_definition(n):
        errs.append(f"member: in_A={p['in_A']} disagrees for n={n}")
    k = p.get("first_full_block")
    if k is not None and not block_full_by_definition(n, k):
        errs.append(f"member: block {k} of {n} is not full")


def _replay_density(p: dict, errs: list[str]) -> None:
    d = p["d"]
    window = int(p["window"])
    if window != 1 << (1 << (d + 1)):
        errs.append("density: wrong window")
    count = int(p["count"])
    if window <= 1 << 16:
        brute = sum(1 for n in range(window) if member_by_definition(n))
        if brute != count:
            errs.append(f"density: count {count} but scan finds {brute}")
    if _frac(p["partial"]) != Fraction(count, window):
        errs.append("density: partial != count / window")
    rows = p.get("rows", [])
    for a, b in zip(rows, rows[1:]):
        if not _frac(b["partial"]) < _frac(a["partial"]):
            errs.append(f"density: partials not decreasing at d={b['d']}")


def _replay_blocker(p: dict, errs: list[str]) -> None:
    c = [int(v) for v in p["c"]]
    n = 1 << (1 << (len(c) + 1))
    if int(p["n"]) != n:
        errs.append("blocker: wrong window length")
    for cert in p["certificates"]:
        x, y = int(cert["x"]), int(cert["y"])
        if not x < y <= x + n:
            errs.append(f"blocker: y={y} outside ({x}, {x + n}]")
        if sorted(int(mi["c"]) for mi in cert["misses"]) != sorted(c):
            errs.append("blocker: misses do not match c")
        for mi in cert["misses"]:
            v = y + int(mi["c"])
            if member_by_definition(v):
                errs.append(f"blocker: {v} is in A")
            if not block_full_by_definition(v, mi["block"]):
                errs.append(f"blocker: block {mi['block']} of {v} not full")


def _replay_shift(p: dict, errs: list[str]) -> None:
    a = int(p["a"])
    b = [int(v) for v in p["b"]]
    mod = 1 << (len(b) + 1)
    if any(v % mod for v in b):
        errs.append("shift-into-a: input not divisible")
    for v in b:
        if not member_by_definition(a + v):
            errs.append(f"shift-into-a: {a}+{v} not in A")


def _replay_jwitness(p: dict, errs: list[str]) -> None:
    a = [int(v) for v in p["a"]]
    t = p["t"]
    if len(a) != p["m"] + 1 or len(t) != p["m"] or any(x >= y for x, y in zip(t, t[1:])) or t[0] < 1:
        errs.append("jwitness: malformed witness")
        return
    for spec in p["sequences"]:
        f = parse_sequence(spec["spec"], spec["length"])
        value = sum(a) + sum(f.values[j - 1] for j in t)
        if not member_by_definition(value):
            errs.append(f"jwitness: chi={value} not in A for {spec['spec']}")


def _replay_largeness(p: dict, errs: list[str]) -> None:
    pred = parse_set(p["set"], member_A=member_by_definition)
    lo, hi = p["lo"], p["hi"]
    status, cert, check = p["status"], p["certificate"], p["check"]

    def inside(x: int) -> bool:
        if not lo <= x < hi:
            raise ValueError(f"query {x} outside window")
        return pred(x)

    if check == "thick":
        span = cert.get("span", p["bounds_used"]["H_span"])
        if status == "confirmed":
            s = cert["s"]
            if not all(inside(s + h) for h in range(span + 1)):
                errs.append("thick: confirming translate not inside X")
        elif status == "refuted":
            if any(inside(h) for h in cert["holes"]) or not _covers_blocks(cert["holes"], lo, hi, span):
                errs.append("thick: hole list invalid")
    elif check == "pws":
        span = p["bounds_used"]["H_span"]
        certs = [cert] if status == "confirmed" else cert.get("per_H", [])
        for c in certs:
            H = c["H"]
            ilo, ihi = c["interior"]
            if [ilo, ihi] != [lo - min(H), hi - max(H)]:
                errs.append(f"pws: wrong interior for H={H}")
                continue
            union = lambda s: any(inside(s + t) for t in H)  # noqa: E731
            if status == "confirmed":
                if not all(union(c["s"] + h) for h in range(span + 1)):
                    errs.append(f"pws: confirming translate fails for H={H}")
            elif any(union(h) for h in c["holes"]) or not _covers_blocks(c["holes"], ilo, ihi, span):
                errs.append(f"pws: blockers invalid for H={H}")
    elif check == "syndetic":
        g = cert.get("g")
        members = [inside(x) for x in range(lo, hi)]
        if g is None:
            if status == "confirmed" or any(members):
                errs.append("syndetic: absent bound but X meets the window")
        else:
            runs, cur = 0, 0
            for m in members:
                cur = 0 if m else cur + 1
                runs = max(runs, cur)
            if runs + 1 != g:
                errs.append(f"syndetic: bound {g} but longest hole is {runs}")
    elif check == "cover":
        R = cert["shift_range"]
        interior = range(lo + R, hi - R)
        if status == "confirmed":
            gs = cert["shifts"]
            if len(gs) != cert["k"] or any(abs(g) > R for g in gs):
                errs.append("cover: bad shift list")
            elif not all(any(inside(y - g) for g in gs) for y in interior):
                errs.append("cover: shifts leave a point uncovered")
        elif status == "refuted" and _cover_exists(inside, interior, cert["k"], R):
            errs.append("cover: a cover exists although absence was reported")
    else:
        errs.append(f"largeness: unknown check {check!r}")


def _cover_exists(pred: Predicate, interior: range, k: int, R: int) -> bool:
    """Plain depth-first search over shifts covering the first uncovered point."""
    points = list(interior)
    cover = {g: {y for y in points if pred(y - g)} for g in range(-R, R + 1)}

    def go(left: set, depth: int) -> bool:
        if not left:
            return True
        if depth == 0:
            return False
        y = min(left)
        return any(go(left - cover[g], depth - 1) for g in cover if y in cover[g])

    return go(set(points), k)


def _replay_padic(p: dict, errs: list[str]) -> None:
    prime = p["p"]

    def v(q: Fraction):
        if q == 0:
            return None
        n, d, e = abs(q.numerator), q.denominator, 0
        while n % prime == 0:
            n //= prime
            e += 1
        while d % prime == 0:
            d //= prime
            e -= 1
        return e

    def same(x, claimed) -> bool:
        return (x is None and claimed == "inf") or x == claimed

    op = p["op"]
    if op == "val":
        if not same(v(_frac(p["q"])), p["valuation"]):
            errs.append("padic val mismatch")
    elif op == "ultrametric":
        a, b = _frac(p["a"]), _frac(p["b"])
        for q, key in ((a, "v_a"), (b, "v_b"), (a + b, "v_sum")):
            if not same(v(q), p[key]):
                errs.append(f"padic {key} mismatch")
    elif op == "pair":
        a, s1, s2 = _frac(p["a"]), _frac(p["s1"]), _frac(p["s2"])
        bound = v(s1 - s2)
        chosen = v(a + s1) if p["which"] == "first" else v(a + s2)
        if bound != p["bound"] or not (chosen is not None and chosen <= bound):
            errs.append("padic pair bound fails")
    elif op == "ball":
        t, k = p["t"], p["k"]
        s1 = sum(prime ** (1 + j + k) for j in t)
        s2 = sum(prime ** (2 + j + k) for j in t)
        if v(Fraction(s1 - s2)) != p["valuation"] or p["valuation"] != 1 + k + t[0]:
            errs.append("padic ball valuation mismatch")
    else:
        errs.append(f"padic: unknown op {op!r}")


_REPLAYERS = {
    "member": _replay_member,
    "density": _replay_density,
    "blocker": _replay_blocker,
    "shift-into-a": _replay_shift,
    "jwitness": _replay_jwitness,
    "largeness": _replay_largeness,
    "padic": _replay_padic,
}


def replay_payload(payload: dict) -> list[str]:
    """Problems found while re-checking ``payload``; empty means it replays.

    A selftest report replays by replaying every embedded certificate.
    """
    kind = payload.get("kind")
    if kind == "selftest":
        errs = []
        for cert in payload.get("certificates", []):
            errs.extend(replay_payload(cert))
        if not payload.get("passed", False):
            errs.append("selftest report records failures")
        return errs
    if kind not in _REPLAYERS:
        return [f"unknown payload kind {kind!r}"]
    errs: list[str] = []
    try:
        _REPLAYERS[kind](payload, errs)
    except (KeyError, TypeError, ValueError) as exc:
        errs.append(f"{kind}: malformed payload ({exc})")
    return errs
