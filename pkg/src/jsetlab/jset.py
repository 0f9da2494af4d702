"""J-set witnesses: the chi product, verification, bounded search and shifting.

A witness ``(m, a, t)`` has ``m + 1`` padding elements ``a`` and a strictly
increasing tuple ``t`` of ``m`` indices (1-based).  For a sequence ``f`` the
chi product is ``a(1) f(t(1)) a(2) f(t(2)) ... a(m) f(t(m)) a(m+1)``.  In an
additive commutative group this is ``sum(a) + sum(f(j) for j in t)``.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterable, Iterator, Optional, Sequence, TypeVar

T = TypeVar("T")
Membership = Callable[[Any], bool]


@dataclass(frozen=True)
class Group(Generic[T]):
    """A group given by its operation, inverse and identity."""

    op: Callable[[T, T], T]
    inv: Callable[[T], T]
    identity: T
    commutative: bool = True
    name: str = "group"


INTEGERS: Group[int] = Group(operator.add, operator.neg, 0, True, "Z")


def free_group_words() -> Group[tuple]:
    """Free group on symbols, elements as reduced tuples of ``(symbol, ±1)``.

    Only used to exercise the non-commutative chi evaluation.
    """

    def reduce_concat(u: tuple, v: tuple) -> tuple:
        out = list(u)
        for letter in v:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
        return tuple(out)

    def inverse(u: tuple) -> tuple:
        return tuple((s, -e) for s, e in reversed(u))

    return Group(reduce_concat, inverse, (), False, "free")


@dataclass(frozen=True)
class SequencePrefix:
    """Finite prefix ``f(1), ..., f(L)`` of a sequence."""

    values: tuple

    def __post_init__(self):
        if len(self.values) == 0:
            raise ValueError("sequence prefix must be nonempty")
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self) -> int:
        return len(self.values)

    def at(self, j: int):
        """``f(j)``, 1-based."""
        if not 1 <= j <= len(self.values):
            raise IndexError(f"index {j} outside prefix 1..{len(self.values)}")
        return self.values[j - 1]

    @classmethod
    def from_function(cls, f: Callable[[int], Any], length: int) -> "SequencePrefix":
        return cls(tuple(f(j) for j in range(1, length + 1)))

    @classmethod
    def affine(cls, slope: int, offset: int, length: int) -> "SequencePrefix":
        return cls(tuple(slope * j + offset for j in range(1, length + 1)))


def _check_index_tuple(t: Sequence[int]) -> None:
    if any(j < 1 for j in t):
        raise ValueError(f"indices are 1-based, got {tuple(t)}")
    if any(x >= y for x, y in zip(t, t[1:])):
        raise ValueError(f"index tuple must be strictly increasing, got {tuple(t)}")


@dataclass(frozen=True)
class JWitness:
    m: int
    a: tuple
    t: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "t", tuple(self.t))
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if len(self.a) != self.m + 1 or len(self.t) != self.m:
            raise ValueError(
                f"witness shape mismatch: m={self.m}, |a|={len(self.a)}, |t|={len(self.t)}"
            )
        _check_index_tuple(self.t)

    @classmethod
    def reduced(cls, shift, t: Sequence[int], group: Group = INTEGERS) -> "JWitness":
        """Commutative form: one shift in ``a(1)``, identity elsewhere."""
        t = tuple(t)
        return cls(len(t), (shift,) + (group.identity,) * len(t), t)


def chi(w: JWitness, f: SequencePrefix, group: Group = INTEGERS):
    """The alternating product, evaluated left to right in ``group``."""
    if w.t[-1] > len(f):
        raise IndexError(f"witness index {w.t[-1]} exceeds prefix length {len(f)}")
    acc = w.a[0]
    for i, j in enumerate(w.t):
        acc = group.op(acc, f.at(j))
        acc = group.op(acc, w.a[i + 1])
    return acc


def chi_reduced(w: JWitness, f: SequencePrefix) -> int:
    """Additive shortcut ``sum(a) + sum(f(j) for j in t)``."""
    if w.t[-1] > len(f):
        raise IndexError(f"witness index {w.t[-1]} exceeds prefix length {len(f)}")
    return sum(w.a) + sum(f.at(j) for j in w.t)


def verify_witness(X: Membership, F: Sequence[SequencePrefix], w: JWitness,
                   group: Group = INTEGERS) -> bool:
    """True iff ``chi(w, f) ∈ X`` for every f in F."""
    shortest = min(len(f) for f in F)
    if w.t[-1] > shortest:
        raise IndexError(f"witness index {w.t[-1]} exceeds shortest prefix length {shortest}")
    return all(X(chi(w, f, group)) for f in F)


@dataclass(frozen=True)
class SearchBounds:
    """Limits for :func:`brute_witness_search`.

    ``a_range`` is the half-width of the centered box each padding entry ranges
    over.  ``t_max`` caps the largest index (default: shortest prefix).  With
    ``reduced=True`` (commutative groups only) the search ranges over the
    total shift, placed in ``a(1)``, rather than the full ``(m+1)``-box, since
    chi depends only on ``sum(a)``.
    """

    m_max: int = 2
    a_range: int = 16
    t_max: Optional[int] = None
    reduced: bool = True

    def __post_init__(self):
        if self.m_max < 1 or self.a_range < 0:
            raise ValueError(f"bounds must be positive: {self}")


def centered(radius: int) -> Iterator[int]:
    """0, 1, -1, 2, -2, ..., radius, -radius."""
    yield 0
    for r in range(1, radius + 1):
        yield r
        yield -r


def _a_tuples(m: int, bounds: SearchBounds) -> Iterable[tuple[int, ...]]:
    if bounds.reduced:
        return ((s,) + (0,) * m for s in centered(bounds.a_range))
    return itertools.product(list(centered(bounds.a_range)), repeat=m + 1)


def brute_witness_search(X: Membership, F: Sequence[SequencePrefix],
                         bounds: SearchBounds = SearchBounds()) -> Optional[JWitness]:
    """First witness in (m ascending, t lexicographic, a centered) order, or None.

    None only means nothing was found inside ``bounds``; it says nothing about
    X failing to be a J-set.  Integer instance only.
    """
    shortest = min(len(f) for f in F)
    t_max = shortest if bounds.t_max is None else min(bounds.t_max, shortest)
    for m in range(1, bounds.m_max + 1):
        for t in itertools.combinations(range(1, t_max + 1), m):
            sums = [sum(f.at(j) for j in t) for f in F]
            for a in _a_tuples(m, bounds):
                shift = sum(a)
                if all(X(shift + s) for s in sums):
                    return JWitness(m, a, t)
    return None


def shift_witness(w: JWitness, g, group: Group = INTEGERS) -> JWitness:
    """Witness for the left translate ``g X``: replaces ``a(1)`` by ``g a(1)``."""
    return JWitness(w.m, (group.op(g, w.a[0]),) + w.a[1:], w.t)
