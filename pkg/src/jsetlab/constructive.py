"""Explicit constructions around A: blockers, residue selection and shifts into A.

* :func:`construct_blocker` finds, in any window of length ``2^(2^(m+1))``,
  a point y such that ``y + c_k`` fills block ``B_k`` for each k, so none of
  the ``y + c_k`` lies in A.  Iterated over probes this refutes piecewise
  syndeticity with a window length depending only on ``m = |H|``.
* :func:`pigeonhole_select` picks ``2^(n+1)`` indices on which every one of n
  sequences is constant mod ``2^(n+1)``, so each selected sum is divisible by
  ``2^(n+1)``.
* :func:`shift_into_A` finds a single a with ``a + b_i ∈ A`` for n integers
  ``b_i`` divisible by ``2^(n+1)``.
* :func:`jwitness_for_A` composes the last two into a J-set witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .bignat import block_is_full, is_member_A
from .errors import BudgetExceeded, PrefixTooShort
from .jset import JWitness, SequencePrefix, verify_witness

DEFAULT_BLOCKER_M = 3


def blocker_period(m: int) -> int:
    return 1 << (1 << (m + 1))


@dataclass(frozen=True)
class BlockerCertificate:
    """``y`` in ``(x, x + n]`` with ``B_k ⊆ supp(y + c)`` for each ``(c, k)`` in misses."""

    y: int
    x: int
    n: int
    misses: tuple[tuple[int, int], ...]
    residue: int

    def check(self) -> bool:
        if not self.x < self.y <= self.x + self.n:
            return False
        return all(block_is_full(self.y + c, k) and not is_member_A(self.y + c)
                   for c, k in self.misses)


def _blocking_residue(c: Sequence[int]) -> int:
    """Residue d mod ``2^(2^(m+1))`` with block B_k of ``d + c[k-1]`` full.

    Blocks are handled in increasing order.  The correction for block B_k is a
    multiple of ``2^(2^k)`` below ``2^(2^(k+1))``; it leaves bits under
    ``2^k`` alone (so earlier blocks stay full) and, because it exactly
    completes the block, produces no carry out of it.
    """
    d = 0
    for k, ck in enumerate(c, start=1):
        width = 1 << k
        full = (1 << width) - 1
        current = ((d + ck) >> width) & full
        d += (full - current) << width
    return d


def exhaustive_blocking_residue(c: Sequence[int]) -> Optional[int]:
    """Smallest residue d mod ``2^(2^(m+1))`` whose translates fill the blocks."""
    for d in range(blocker_period(len(c))):
        if all(block_is_full(d + ck, k) for k, ck in enumerate(c, start=1)):
            return d
    return None


def construct_blocker(c: Sequence[int], x: int, max_m: int = DEFAULT_BLOCKER_M) -> BlockerCertificate:
    m = len(c)
    if m < 1:
        raise ValueError("need at least one translate c")
    if m > max_m:
        raise BudgetExceeded("blocker_m", max_m, m)
    if any(ck < 0 for ck in c):
        raise ValueError(f"translates must be naturals, got {tuple(c)}")
    n = blocker_period(m)
    d = _blocking_residue(c)
    if not all(block_is_full(d + ck, k) for k, ck in enumerate(c, start=1)):
        d = exhaustive_blocking_residue(c)
        if d is None:
            raise ArithmeticError(f"no blocking residue for c={tuple(c)}")
    y = x + 1 + (d - x - 1) % n
    cert = BlockerCertificate(y, x, n, tuple((ck, k) for k, ck in enumerate(c, start=1)), d % n)
    if not cert.check():
        raise ArithmeticError(f"blocker certificate failed its own check: {cert}")
    return cert


def refute_piecewise_syndetic(H: Sequence[int], probes: Sequence[int],
                              max_m: int = DEFAULT_BLOCKER_M) -> list[BlockerCertificate]:
    """One blocker per probe: ``y ∈ (x, x + 2^(2^(m+1))]`` outside ``∪_{c∈H} (A - c)``."""
    return [construct_blocker(H, x, max_m) for x in probes]


def prefix_budget(n: int) -> int:
    """Prefix length that always suffices for :func:`pigeonhole_select`.

    Each of the n refinement rounds keeps at least a ``1/2^(n+1)`` share of the
    surviving indices, and ``2^(n+1)`` must remain at the end.
    """
    modulus = 1 << (n + 1)
    return modulus ** (n + 1)


@dataclass(frozen=True)
class PigeonholeCertificate:
    t: tuple[int, ...]
    residue_classes: tuple[int, ...]
    modulus: int

    def check(self, F: Sequence[SequencePrefix]) -> bool:
        if len(self.t) != self.modulus or any(a >= b for a, b in zip(self.t, self.t[1:])):
            return False
        for f, r in zip(F, self.residue_classes):
            if any(f.at(j) % self.modulus != r for j in self.t):
                return False
            if sum(f.at(j) for j in self.t) % self.modulus:
                return False
        return True


def pigeonhole_select(F: Sequence[SequencePrefix]) -> PigeonholeCertificate:
    """Nested residue refinement ``I_0 ⊇ I_1 ⊇ ... ⊇ I_n``, then the first ``2^(n+1)`` survivors.

    Round i keeps the residue class of ``f_i`` mod ``2^(n+1)`` whose earliest
    index comes first among the classes large enough to guarantee completion
    (``>= modulus^(n-i+1)`` members); if none is that large the largest class
    is kept and the final size check decides.
    """
    n = len(F)
    if n < 1:
        raise ValueError("need at least one sequence")
    modulus = 1 << (n + 1)
    length = min(len(f) for f in F)
    survivors = list(range(1, length + 1))
    residues = []
    for i, f in enumerate(F, start=1):
        classes: dict[int, list[int]] = {}
        for j in survivors:
            classes.setdefault(f.at(j) % modulus, []).append(j)
        safe = modulus ** (n - i + 1)
        # dict preserves insertion order, i.e. order of each class's first index
        chosen = next((r for r, members in classes.items() if len(members) >= safe), None)
        if chosen is None:
            chosen = max(classes, key=lambda r: len(classes[r]))
        survivors = classes[chosen]
        residues.append(chosen)
        if len(survivors) < modulus:
            raise PrefixTooShort(i, len(survivors), modulus, prefix_budget(n))
    return PigeonholeCertificate(tuple(survivors[:modulus]), tuple(residues), modulus)


def shift_into_A(b: Sequence[int]) -> int:
    """Some a with ``a + b_i ∈ A`` for every i; each ``b_i`` must be divisible by ``2^(n+1)``.

    Lift everything to ``c_i = base + b_i >= 2^(n+1)``, which clears bits
    ``0..n`` and hence leaves holes in blocks ``B_0..B_{l-1}`` where l is least
    with ``2^l > n``.  Then walk the blocks ``B_l, B_{l+1}, ...``: in each, pick
    the smallest position r such that adding ``2^r`` leaves every ``c_i`` with a
    hole there.  Adding ``2^r`` to a number makes its block full for at most
    one r, and the block has ``2^(l+j) > n`` positions, so such r exists.
    Stop once all values are below ``2^(2^(l+j+1))``: later blocks are empty.
    """
    n = len(b)
    if n < 1:
        raise ValueError("need at least one b_i")
    modulus = 1 << (n + 1)
    bad = [bi for bi in b if bi % modulus]
    if bad:
        raise ValueError(f"entries must be divisible by {modulus}: {bad}")
    base = modulus * (max(abs(bi) for bi in b) // modulus + 1)
    values = [base + bi for bi in b]
    lvl = n.bit_length()
    shift = 0
    j = 0
    while True:
        k = lvl + j
        width = 1 << k
        for r in range(width, 2 * width):
            bumped = [v + (1 << r) for v in values]
            if not any(block_is_full(v, k) for v in bumped):
                break
        else:
            raise ArithmeticError(f"no hole-preserving position in block {k}")
        values = bumped
        shift += 1 << r
        if all(v.bit_length() <= 2 * width for v in values):
            break
        j += 1
    a = base + shift
    if not all(is_member_A(a + bi) for bi in b):
        raise ArithmeticError(f"shift {a} does not move {tuple(b)} into A")
    return a


def jwitness_for_A(F: Sequence[SequencePrefix]) -> JWitness:
    """Reduced-form witness: ``a + sum_{j∈t} f_i(j) ∈ A`` for every f_i in F."""
    cert = pigeonhole_select(F)
    sums = [sum(f.at(j) for j in cert.t) for f in F]
    a = shift_into_A(sums)
    w = JWitness.reduced(a, cert.t)
    if not verify_witness(is_member_A, F, w):
        raise ArithmeticError("composed witness failed verification")
    return w


def jwitness_for_A_adaptive(funcs: Sequence[Callable[[int], int]], start_length: int = 16,
                            max_length: Optional[int] = None) -> tuple[JWitness, list[SequencePrefix]]:
    """Like :func:`jwitness_for_A` for sequences given as functions.

    Starts from ``start_length`` and doubles the prefix on
    :class:`PrefixTooShort`, up to ``max_length`` (default: the guaranteed budget).
    """
    n = len(funcs)
    cap = prefix_budget(n) if max_length is None else max_length
    length = start_length
    while True:
        F = [SequencePrefix.from_function(f, length) for f in funcs]
        try:
            return jwitness_for_A(F), F
        except PrefixTooShort:
            if length >= cap:
                raise
            length = min(2 * length, cap)

