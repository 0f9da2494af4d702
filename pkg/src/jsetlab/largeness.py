"""Finite-window checkers for thick, syndetic and piecewise syndetic sets and translate covers.

Everything here looks at a set only through a window ``[lo, hi)``.  Universal
claims are made only about the part of the window where every needed
translate is visible (the *interior*), and each verdict records that interior
in ``bounds_used``.  A window verdict is the finite shadow of an infinite
statement, never a proof of it.

Piecewise syndeticity is tested through its thickness characterisation: X is
piecewise syndetic iff ``∪_{t∈H} (X - t)`` is thick for some finite H.  Over
the full powerset structure on ``Z`` this notion coincides with weak
genericity, so no separate weak-genericity check exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .errors import WindowError
from .jset import centered

CONFIRMED = "confirmed"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"
EXACT_COVER_MAX_K = 4


@dataclass(frozen=True, eq=False)
class WindowSet:
    """``X ∩ [lo, hi)`` as a boolean map; ``bits[i]`` is membership of ``lo + i``."""

    lo: int
    hi: int
    bits: np.ndarray

    def __post_init__(self):
        if not self.lo < self.hi:
            raise WindowError(f"empty window [{self.lo}, {self.hi})")
        bits = np.asarray(self.bits, dtype=bool)
        if bits.shape != (self.hi - self.lo,):
            raise WindowError(f"bit map has shape {bits.shape}, window length is {self.hi - self.lo}")
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_predicate(cls, pred: Callable[[int], bool], lo: int, hi: int) -> "WindowSet":
        return cls(lo, hi, np.fromiter((pred(x) for x in range(lo, hi)), dtype=bool, count=hi - lo))

    @classmethod
    def from_members(cls, members, lo: int, hi: int) -> "WindowSet":
        bits = np.zeros(hi - lo, dtype=bool)
        for x in members:
            if lo <= x < hi:
                bits[x - lo] = True
        return cls(lo, hi, bits)

    def __len__(self) -> int:
        return self.hi - self.lo

    def __contains__(self, x: int) -> bool:
        if not self.lo <= x < self.hi:
            raise WindowError(f"{x} outside window [{self.lo}, {self.hi})")
        return bool(self.bits[x - self.lo])

    def members(self) -> np.ndarray:
        return np.flatnonzero(self.bits) + self.lo

    def complement(self) -> "WindowSet":
        return WindowSet(self.lo, self.hi, ~self.bits)

    def predicate(self) -> Callable[[int], bool]:
        return self.__contains__


@dataclass
class LargenessVerdict:
    status: str
    certificate: dict = field(default_factory=dict)
    bounds_used: dict = field(default_factory=dict)

    @property
    def confirmed(self) -> bool:
        return self.status == CONFIRMED

    @property
    def refuted(self) -> bool:
        return self.status == REFUTED


def _longest_run(bits: np.ndarray) -> tuple[int, int]:
    """(length, start offset) of the first longest run of True values."""
    if not bits.any():
        return 0, 0
    padded = np.concatenate(([False], bits, [False])).astype(np.int8)
    edges = np.diff(padded)
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1)
    lengths = ends - starts
    i = int(np.argmax(lengths))
    return int(lengths[i]), int(starts[i])


def syndetic_bound(X: WindowSet) -> Optional[int]:
    """Least g such that every g consecutive integers of the window meet X.

    Equivalently the largest spacing between members when the window edges
    count as members; X's translates by ``0..g-1`` then cover the window from
    ``lo + g - 1`` on.  None when X misses the window entirely.
    """
    if not X.bits.any():
        return None
    hole, _ = _longest_run(~X.bits)
    return hole + 1


def _sparse_holes(holes: np.ndarray, lo: int, hi: int, span: int) -> list[int]:
    """Greedy subset of ``holes`` hitting every block ``[s, s + span]`` with ``lo <= s < hi - span``.

    Assumes the full hole set does.
    """
    chosen = []
    cur = lo
    last_start = hi - span - 1
    while cur <= last_start:
        i = int(np.searchsorted(holes, cur + span, side="right")) - 1
        h = int(holes[i])
        chosen.append(h)
        cur = h + 1
    return chosen


def _thick_on(bits: np.ndarray, lo: int, span: int) -> tuple[str, dict]:
    hi = lo + len(bits)
    run, start = _longest_run(bits)
    if run >= span + 1:
        return CONFIRMED, {"span": span, "s": lo + start}
    holes = np.flatnonzero(~bits) + lo
    return REFUTED, {"span": span, "holes": _sparse_holes(holes, lo, hi, span)}


def thick_check(X: WindowSet, H_span: int) -> LargenessVerdict:
    """Is some translate ``s + {0..H_span}`` inside X within the window?

    Refutations carry a list of non-members meeting every such translate.
    """
    if H_span < 0 or H_span >= len(X):
        raise WindowError(f"span {H_span} needs a window longer than {len(X)}")
    status, cert = _thick_on(X.bits, X.lo, H_span)
    return LargenessVerdict(status, cert, {"lo": X.lo, "hi": X.hi, "interior": [X.lo, X.hi],
                                           "H_span": H_span})


def translate_union(X: WindowSet, H: Sequence[int]) -> WindowSet:
    """``∪_{t∈H} (X - t)`` on the interior where every ``s + t`` is in the window."""
    if not H:
        raise ValueError("translate set must be nonempty")
    ilo, ihi = X.lo - min(H), X.hi - max(H)
    if ilo >= ihi:
        raise WindowError(f"translates {sorted(H)} leave no interior in [{X.lo}, {X.hi})")
    u = np.zeros(ihi - ilo, dtype=bool)
    for t in set(H):
        off = ilo + t - X.lo
        u |= X.bits[off:off + len(u)]
    return WindowSet(ilo, ihi, u)


def pws_check(X: WindowSet, H_candidates: Sequence[Sequence[int]], H_span: int) -> LargenessVerdict:
    """Piecewise syndeticity through thickness of translate unions, one candidate H at a time."""
    bounds = {"lo": X.lo, "hi": X.hi, "H_span": H_span, "candidates": len(H_candidates)}
    if not H_candidates:
        return LargenessVerdict(INCONCLUSIVE, {}, bounds)
    refutations = []
    for H in H_candidates:
        U = translate_union(X, H)
        if H_span >= len(U):
            raise WindowError(f"span {H_span} exceeds interior of length {len(U)} for H={sorted(H)}")
        status, cert = _thick_on(U.bits, U.lo, H_span)
        cert = {"H": sorted(set(H)), "interior": [U.lo, U.hi], **cert}
        if status == CONFIRMED:
            return LargenessVerdict(CONFIRMED, cert, bounds)
        refutations.append(cert)
    return LargenessVerdict(REFUTED, {"span": H_span, "per_H": refutations}, bounds)


def _to_int(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def cover_with_translates(X: WindowSet, k: int, shift_range: int) -> Optional[list[int]]:
    """Shifts ``g_1..g_k`` in ``[-shift_range, shift_range]`` whose translates ``g + X`` cover the interior.

    The interior is ``[lo + shift_range, hi - shift_range)``; shifts are tried
    in order of increasing ``|g|`` and returned sorted.  Exact
    branch-and-bound for ``k <= 4``: the lowest uncovered point must be covered
    by one of the candidate shifts, so only those are branched on.  For larger
    k a greedy cover is tried, and None from it proves nothing.
    """
    R = shift_range
    ilo, ihi = X.lo + R, X.hi - R
    if R < 0 or ilo >= ihi:
        raise WindowError(f"shift range {R} leaves no interior in [{X.lo}, {X.hi})")
    if k < 1:
        return None
    width = ihi - ilo
    full = (1 << width) - 1
    xmask = _to_int(X.bits)
    shifts = list(centered(R))
    # y is covered by g iff y - g in X; bit (y - ilo) of cover[g]
    cover = {g: (xmask >> (R - g)) & full for g in shifts}

    def pad(chosen: list[int]) -> Optional[list[int]]:
        if len(chosen) < k:
            extra = [g for g in shifts if g not in chosen][: k - len(chosen)]
            if len(chosen) + len(extra) < k:
                return None
            chosen = chosen + extra
        return sorted(chosen)

    if k <= EXACT_COVER_MAX_K:
        def dfs(covered: int, depth: int, chosen: list[int]) -> Optional[list[int]]:
            if covered == full:
                return chosen
            if depth == 0:
                return None
            free = ~covered & full
            y_bit = (free & -free).bit_length() - 1
            for g in shifts:
                if (cover[g] >> y_bit) & 1 and g not in chosen:
                    found = dfs(covered | cover[g], depth - 1, chosen + [g])
                    if found is not None:
                        return found
            return None

        found = dfs(0, k, [])
        return None if found is None else pad(found)

    covered, chosen = 0, []
    for _ in range(k):
        g = max(shifts, key=lambda s: (bin(cover[s] & ~covered).count("1"), -abs(s)))
        covered |= cover[g]
        chosen.append(g)
        if covered == full:
            return pad(chosen)
    return None

