"""JSON-ready payloads for results and certificates.

Domain integers are written as decimal strings so nothing loses precision in
a JSON reader; structural integers (block indices, d, m, window offsets of
checkers) stay numbers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .bignat import full_block_witness, is_member_A
from .constructive import BlockerCertificate
from .density import ConvergenceRow, partial_product, tail_bound
from .jset import JWitness, SequencePrefix, chi
from .largeness import LargenessVerdict


def frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def member_payload(n: int) -> dict:
    witness = full_block_witness(n) if n >= 0 else None
    return {"kind": "member", "n": str(n), "in_A": is_member_A(n), "first_full_block": witness}


def row_payload(row: ConvergenceRow) -> dict:
    return {"d": row.d, "partial": frac(row.partial), "partial_decimal": f"{float(row.partial):.10f}",
            "tail_bound": frac(row.tail_bound), "limit_lower": frac(row.limit_lower)}


def density_payload(d: int, method: str, count: int, rows: Sequence[ConvergenceRow]) -> dict:
    window = 1 << (1 << (d + 1))
    p = partial_product(d)
    return {
        "kind": "density",
        "d": d,
        "method": method,
        "count": str(count),
        "window": str(window),
        "partial": frac(p),
        "partial_decimal": f"{float(p):.10f}",
        "tail_bound": frac(tail_bound(d)),
        "rows": [row_payload(r) for r in rows],
    }


def blocker_cert_payload(cert: BlockerCertificate) -> dict:
    misses = []
    for c, k in cert.misses:
        v = cert.y + c
        misses.append({"c": str(c), "value": str(v), "block": k, "in_A": is_member_A(v),
                       "first_full_block": full_block_witness(v) if v >= 0 else None})
    return {"x": str(cert.x), "y": str(cert.y), "residue": str(cert.residue), "misses": misses}


def blocker_payload(c: Sequence[int], certs: Sequence[BlockerCertificate]) -> dict:
    n = certs[0].n if certs else None
    return {"kind": "blocker", "c": [str(v) for v in c], "m": len(c),
            "n": None if n is None else str(n),
            "certificates": [blocker_cert_payload(cert) for cert in certs]}


def shift_payload(b: Sequence[int], a: int) -> dict:
    return {"kind": "shift-into-a", "n": len(b), "b": [str(v) for v in b], "a": str(a),
            "values": [{"b": str(v), "sum": str(a + v), "in_A": is_member_A(a + v)} for v in b]}


def jwitness_payload(specs: Sequence[dict], F: Sequence[SequencePrefix], w: JWitness) -> dict:
    return {"kind": "jwitness", "sequences": list(specs), "m": w.m,
            "a": [str(v) for v in w.a], "t": list(w.t),
            "chi": [{"value": str(chi(w, f)), "in_A": is_member_A(chi(w, f))} for f in F]}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if hasattr(obj, "item"):  # numpy scalar
        return obj.item()
    return obj


def largeness_payload(check: str, set_spec: str, lo: int, hi: int, verdict: LargenessVerdict) -> dict:
    return {"kind": "largeness", "check": check, "set": set_spec, "lo": lo, "hi": hi,
            "status": verdict.status, "certificate": _jsonable(verdict.certificate),
            "bounds_used": _jsonable(verdict.bounds_used)}
