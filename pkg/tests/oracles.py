"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools

import mpmath


def supp(n: int) -> set[int]:
    return {i for i, ch in enumerate(reversed(bin(n)[2:])) if ch == "1"}


def member_A(n: int) -> bool:
    """Straight from the definition: every block B_k leaves a hole in supp(n)."""
    if n < 0:
        return False
    s = supp(n)
    k = 0
    while 2 ** k <= n.bit_length():
        if set(range(2 ** k, 2 ** (k + 1))) <= s:
            return False
        k += 1
    return True


def count_window(d: int) -> int:
    return sum(member_A(n) for n in range(2 ** 2 ** (d + 1)))


def true_tail(d: int, terms: int = 12) -> mpmath.mpf:
    """sum_{k>d} |log(1 - 2^(-2^k))| at high precision."""
    with mpmath.workdps(200):
        return -sum(mpmath.log(1 - mpmath.mpf(2) ** (-(2 ** k))) for k in range(d + 1, d + 1 + terms))


def longest_run(flags) -> int:
    best = cur = 0
    for f in flags:
        cur = cur + 1 if f else 0
        best = max(best, cur)
    return best


def exhaustive_cover(members: set[int], lo: int, hi: int, k: int, R: int):
    """First k-subset of shifts in [-R, R] whose translates cover [lo+R, hi-R)."""
    interior = range(lo + R, hi - R)
    for gs in itertools.combinations(range(-R, R + 1), k):
        if all(any(y - g in members for g in gs) for y in interior):
            return gs
    return None
