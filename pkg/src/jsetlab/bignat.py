"""Binary supports, the blocks B_k and membership in the set A.

A natural number n lies in A when its binary support leaves a hole in every
block ``B_k = {2^k, ..., 2^(k+1) - 1}``.  Only blocks that start below the
bit length of n can possibly be full, so membership is a finite check.

Conventions: ``0`` is in A (empty support) and negative integers are not.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceeded

DEFAULT_SCAN_BUDGET = 1 << 16


@dataclass(frozen=True)
class BigNatural:
    """Arbitrary-precision natural number with random-access bits.

    Thin wrapper over ``int``; every function in this module also accepts a
    plain ``int``.
    """

    value: int = 0

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 0:
            raise ValueError(f"BigNatural needs a non-negative int, got {self.value!r}")

    def __index__(self) -> int:
        return self.value

    __int__ = __index__

    def bit(self, i: int) -> int:
        if i < 0:
            raise IndexError(f"negative bit index {i}")
        return (self.value >> i) & 1

    def with_bit(self, i: int, b: int) -> "BigNatural":
        if i < 0:
            raise IndexError(f"negative bit index {i}")
        if b:
            return BigNatural(self.value | (1 << i))
        return BigNatural(self.value & ~(1 << i))

    def bit_length(self) -> int:
        return self.value.bit_length()

    def support(self) -> tuple[int, ...]:
        return support(self.value)

    @classmethod
    def from_support(cls, indices: Iterable[int]) -> "BigNatural":
        return cls(from_support(indices))


@dataclass(frozen=True)
class BlockIndex:
    """The bit-index block ``B_k``, an inclusive interval of size ``2^k``."""

    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"block index must be >= 0, got {self.k}")

    @property
    def lo(self) -> int:
        return 1 << self.k

    @property
    def hi(self) -> int:
        """Last index in the block (inclusive)."""
        return (1 << (self.k + 1)) - 1

    @property
    def mask(self) -> int:
        """Integer whose set bits are exactly the block's positions."""
        return ((1 << self.lo) - 1) << self.lo

    def __len__(self) -> int:
        return self.lo

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and self.lo <= i <= self.hi


def block(k: int) -> BlockIndex:
    return BlockIndex(k)


def support(n) -> tuple[int, ...]:
    """Positions of the 1-bits of ``n``, increasing."""
    n = operator.index(n)
    if n < 0:
        raise ValueError(f"support is defined for naturals only, got {n}")
    out = []
    i = 0
    while n:
        low = n & -n
        i = low.bit_length() - 1
        out.append(i)
        n ^= low
    return tuple(out)


def from_support(indices: Iterable[int]) -> int:
    n = 0
    for i in indices:
        if i < 0:
            raise ValueError(f"negative bit index {i}")
        n |= 1 << i
    return n


def block_is_full(n: int, k: int) -> bool:
    """True iff ``B_k`` is contained in ``supp(n)``."""
    width = 1 << k
    full = (1 << width) - 1
    return (n >> width) & full == full


def full_block_witness(n) -> Optional[int]:
    """Smallest k with ``B_k ⊆ supp(n)``, or None when n is in A."""
    n = operator.index(n)
    if n < 0:
        raise ValueError(f"full_block_witness is defined for naturals only, got {n}")
    # B_k can only be full if its top index 2^(k+1)-1 is below the bit length.
    length = n.bit_length()
    k = 0
    while (1 << (k + 1)) <= length:
        if block_is_full(n, k):
            return k
        k += 1
    return None


def is_member_A(n) -> bool:
    n = operator.index(n)
    if n < 0:
        return False
    return full_block_witness(n) is None


def count_A(d: int, method: str = "formula", scan_budget: int = DEFAULT_SCAN_BUDGET) -> int:
    """``|A ∩ [0, 2^(2^(d+1)))|`` by brute-force scan or by the product formula.

    The window covers bit 0 (unconstrained) plus blocks B_0..B_d, and block
    B_k admits ``2^(2^k) - 1`` non-full patterns.
    """
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    if method == "formula":
        count = 2
        for k in range(d + 1):
            count *= (1 << (1 << k)) - 1
        return count
    if method == "brute":
        window = 1 << (1 << (d + 1))
        if window > scan_budget:
            raise BudgetExceeded("scan_budget", scan_budget, window)
        return sum(1 for n in range(window) if is_member_A(n))
    raise ValueError(f"unknown method {method!r}; expected 'brute' or 'formula'")
