"""Set and sequence specs used on the command line.

Sets: ``A``, ``evens``, ``odds``, ``all``, ``empty``, ``mod:q:r1,r2,...``.
Sequences: ``affine:p,q`` or an explicit comma list.
"""

from __future__ import annotations

from typing import Callable

from .bignat import is_member_A
from .jset import SequencePrefix

Predicate = Callable[[int], bool]


def parse_set(spec: str, member_A: Predicate = is_member_A) -> Predicate:
    """Membership predicate for a set spec.

    ``member_A`` lets the replay checker substitute its own definition of A.
    """
    if spec == "A":
        return member_A
    if spec == "evens":
        return lambda x: x % 2 == 0
    if spec == "odds":
        return lambda x: x % 2 == 1
    if spec == "all":
        return lambda x: True
    if spec == "empty":
        return lambda x: False
    if spec.startswith("mod:"):
        try:
            _, q, rs = spec.split(":")
            q = int(q)
            residues = frozenset(int(r) % q for r in rs.split(","))
        except ValueError:
            raise ValueError(f"bad set spec {spec!r}; expected mod:q:r1,r2,...") from None
        if q < 1:
            raise ValueError(f"modulus must be positive in {spec!r}")
        return lambda x: x % q in residues
    raise ValueError(f"unknown set {spec!r}; expected A, evens, odds, all, empty or mod:q:r1,r2,...")


def parse_sequence(spec: str, length: int | None = None) -> SequencePrefix:
    """``affine:p,q`` (``f(j) = p*j + q``, needs ``length``) or an explicit comma list."""
    if spec.startswith("affine:"):
        try:
            slope, offset = (int(v) for v in spec[len("affine:"):].split(","))
        except ValueError:
            raise ValueError(f"bad sequence {spec!r}; expected affine:p,q") from None
        if length is None or length < 1:
            raise ValueError("affine sequences need a positive prefix length")
        return SequencePrefix.affine(slope, offset, length)
    try:
        values = tuple(int(v) for v in spec.split(","))
    except ValueError:
        raise ValueError(f"bad sequence {spec!r}; expected affine:p,q or v1,v2,...") from None
    if length is not None:
        values = values[:length]
    return SequencePrefix(values)
