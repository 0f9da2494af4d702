"""Command-line entry point: ``jsetlab <subcommand> ...``.

Exit codes: 0 success, 1 refuted / absent / not a member, 2 usage error,
3 budget exceeded.  JSON output is canonical (sorted keys); CSV exists only
for density tables.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import report
from .bignat import count_A
from .constructive import (
    blocker_period,
    construct_blocker,
    jwitness_for_A,
    prefix_budget,
    shift_into_A,
)
from .density import DEFAULT_D_LIMIT, convergence_report
from .errors import BudgetExceeded, PrefixTooShort, WindowError
from .largeness import (
    CONFIRMED,
    EXACT_COVER_MAX_K,
    INCONCLUSIVE,
    REFUTED,
    LargenessVerdict,
    WindowSet,
    cover_with_translates,
    pws_check,
    syndetic_bound,
    thick_check,
)
from .padic import ball_difference_valuation, low_valuation_of_pair, ultrametric_check, val
from .replay import replay_payload
from .sets import parse_sequence, parse_set

DEFAULT_BUDGET = 1 << 16
EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class CommandResult:
    status: int
    payload: Optional[dict]
    output: str = ""


class UsageError(ValueError):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v != ""]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a rational like 9/2, got {text!r}") from None


def _check_budget(name: str, size: int, budget: int) -> None:
    if size > budget:
        raise BudgetExceeded(name, budget, size)


def _val_out(v):
    return "inf" if v == float("inf") else v


def cmd_member(args) -> tuple[int, dict]:
    p = report.member_payload(args.n)
    return (EXIT_OK if p["in_A"] else EXIT_NEGATIVE), p


def cmd_density(args) -> tuple[int, dict]:
    if args.d < 0:
        raise UsageError("--d must be >= 0")
    if args.d > DEFAULT_D_LIMIT:
        raise BudgetExceeded("d_limit", DEFAULT_D_LIMIT, args.d)
    formula = count_A(args.d, "formula")
    count = formula
    if args.method in ("brute", "both"):
        count = count_A(args.d, "brute", scan_budget=args.budget)
        if args.method == "both" and count != formula:
            raise ArithmeticError(f"brute count {count} != formula {formula}")
    rows = convergence_report(args.d)
    return EXIT_OK, report.density_payload(args.d, args.method, count, rows)


def cmd_blocker(args) -> tuple[int, dict]:
    c = _ints(args.c)
    xs = _ints(args.x)
    if not c or not xs:
        raise UsageError("--c and --x need at least one value")
    _check_budget("blocker_window", blocker_period(len(c)), args.budget)
    certs = [construct_blocker(c, x, max_m=len(c)) for x in xs]
    return EXIT_OK, report.blocker_payload(c, certs)


def cmd_shift(args) -> tuple[int, dict]:
    b = _ints(args.b)
    if not b:
        raise UsageError("--b needs at least one value")
    return EXIT_OK, report.shift_payload(b, shift_into_A(b))


def cmd_jwitness(args) -> tuple[int, dict]:
    if not args.seq:
        raise UsageError("give at least one --seq")
    n = len(args.seq)
    length = args.length if args.length is not None else prefix_budget(n)
    _check_budget("prefix_length", length, args.budget)
    F, specs = [], []
    for spec in args.seq:
        f = parse_sequence(spec, length)
        F.append(f)
        specs.append({"spec": spec, "length": len(f)})
    w = jwitness_for_A(F)
    return EXIT_OK, report.jwitness_payload(specs, F, w)


def _candidates(args) -> list[list[int]]:
    if args.H:
        return [_ints(h) for h in args.H]
    pool = range(args.H_max + 1)
    return [list(h) for size in range(1, args.H_size + 1) for h in itertools.combinations(pool, size)]


def cmd_largeness(args) -> tuple[int, dict]:
    if args.hi <= args.lo:
        raise UsageError("--hi must exceed --lo")
    _check_budget("window_length", args.hi - args.lo, args.budget)
    X = WindowSet.from_predicate(parse_set(args.set), args.lo, args.hi)
    if args.check == "thick":
        verdict = thick_check(X, args.span)
    elif args.check == "syndetic":
        g = syndetic_bound(X)
        verdict = LargenessVerdict(CONFIRMED if g is not None else REFUTED, {"g": g},
                                   {"lo": X.lo, "hi": X.hi})
    elif args.check == "pws":
        verdict = pws_check(X, _candidates(args), args.span)
    else:
        shifts = cover_with_translates(X, args.k, args.shift_range)
        cert = {"k": args.k, "shift_range": args.shift_range, "shifts": shifts,
                "interior": [X.lo + args.shift_range, X.hi - args.shift_range]}
        if shifts is not None:
            status = CONFIRMED
        else:
            status = REFUTED if args.k <= EXACT_COVER_MAX_K else INCONCLUSIVE
        verdict = LargenessVerdict(status, cert, {"lo": X.lo, "hi": X.hi, "exact": args.k <= EXACT_COVER_MAX_K})
    payload = report.largeness_payload(args.check, args.set, args.lo, args.hi, verdict)
    return (EXIT_OK if verdict.status == CONFIRMED else EXIT_NEGATIVE), payload


def cmd_padic(args) -> tuple[int, dict]:
    p = args.p
    base = {"kind": "padic", "op": args.op, "p": p}
    try:
        if args.op == "val":
            q = _rational(args.q)
            return EXIT_OK, {**base, "q": report.frac(q), "valuation": _val_out(val(p, q))}
        if args.op == "ultrametric":
            a, b = _rational(args.a), _rational(args.b)
            r = ultrametric_check(p, a, b)
            return EXIT_OK, {**base, "a": report.frac(a), "b": report.frac(b), "v_a": _val_out(r.v_a),
                             "v_b": _val_out(r.v_b), "v_sum": _val_out(r.v_sum), "holds": r.holds,
                             "sharp": r.sharp}
        if args.op == "pair":
            a, s1, s2 = _rational(args.a), _rational(args.s1), _rational(args.s2)
            which, bound = low_valuation_of_pair(p, a, s1, s2)
            return EXIT_OK, {**base, "a": report.frac(a), "s1": report.frac(s1), "s2": report.frac(s2),
                             "which": which, "bound": bound}
        t = _ints(args.t)
        v = ball_difference_valuation(p, args.k, t)
        return EXIT_OK, {**base, "k": args.k, "t": t, "valuation": v}
    except TypeError:
        raise UsageError(f"padic {args.op}: missing operand") from None


def cmd_selftest(args) -> tuple[int, dict]:
    if args.replay:
        try:
            with open(args.replay) as fh:
                payload = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read replay file: {exc}") from None
        problems = replay_payload(payload)
        out = {"kind": "replay", "replayed": payload.get("kind"), "ok": not problems, "problems": problems}
        return (EXIT_OK if not problems else EXIT_NEGATIVE), out
    from .selftest import run_selftest

    rep = run_selftest(args.seed, scale=args.scale)
    return (EXIT_OK if rep["passed"] else EXIT_NEGATIVE), rep


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help=f"largest exhaustive scan / window / prefix (default {DEFAULT_BUDGET})")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="jsetlab", parents=[common],
                                     description="J-set witnesses and largeness checks for the set A.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("member", parents=[common], help="membership of n in A")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("density", parents=[common], help="count of A on [0, 2^(2^(d+1))) and partial products")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--method", choices=["formula", "brute", "both"], default="formula")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("blocker", parents=[common], help="y in (x, x+2^(2^(m+1))] with y+c outside A")
    p.add_argument("--c", required=True, help="comma-separated translates c_1..c_m")
    p.add_argument("--x", required=True, help="comma-separated probe positions")
    p.set_defaults(func=cmd_blocker)

    p = sub.add_parser("shift-into-a", parents=[common], help="a with a+b_i in A")
    p.add_argument("--b", required=True, help="comma-separated b_i, each divisible by 2^(n+1)")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("jwitness", parents=[common], help="J-set witness for A")
    p.add_argument("--seq", action="append", help="affine:p,q or an explicit list v1,v2,...")
    p.add_argument("--length", type=int, help="prefix length (default: pigeonhole budget)")
    p.set_defaults(func=cmd_jwitness)

    p = sub.add_parser("largeness", parents=[common], help="windowed largeness checks")
    p.add_argument("--check", choices=["thick", "syndetic", "pws", "cover"], required=True)
    p.add_argument("--set", default="A")
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int, default=4096)
    p.add_argument("--span", type=int, default=15)
    p.add_argument("--H", action="append", help="candidate translate set, comma-separated (repeatable)")
    p.add_argument("--H-max", type=int, default=7, help="without --H: candidates are subsets of 0..H_max")
    p.add_argument("--H-size", type=int, default=3, help="without --H: largest candidate size")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--shift-range", type=int, default=64)
    p.set_defaults(func=cmd_largeness)

    p = sub.add_parser("padic", parents=[common], help="p-adic valuation checks")
    p.add_argument("op", choices=["val", "ultrametric", "pair", "ball"])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--s1")
    p.add_argument("--s2")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--t", default="1")
    p.set_defaults(func=cmd_padic)

    p = sub.add_parser("selftest", parents=[common], help="seeded property sampling / certificate replay")
    p.add_argument("--replay", metavar="FILE", help="re-validate a saved JSON payload")
    p.add_argument("--scale", type=float, default=1.0, help="multiplier on case counts")
    p.set_defaults(func=cmd_selftest)
    return parser


def _text(obj, prefix: str = "") -> list[str]:
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            lines.extend(_text(obj[k], f"{prefix}{k}."))
    elif isinstance(obj, list) and obj and isinstance(obj[0], (dict, list)):
        for i, v in enumerate(obj):
            lines.extend(_text(v, f"{prefix}{i}."))
    else:
        value = ",".join(map(str, obj)) if isinstance(obj, list) else obj
        lines.append(f"{prefix[:-1]}: {value}")
    return lines


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True)
    if fmt == "text":
        return "\n".join(_text(payload))
    if payload.get("kind") != "density":
        raise UsageError("csv output is only available for density tables")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["d", "partial", "partial_decimal", "tail_bound", "limit_lower"],
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(payload["rows"])
    return buf.getvalue().rstrip("\n")


def run(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    err = io.StringIO()
    try:
        real_stderr, sys.stderr = sys.stderr, err
        try:
            args = parser.parse_args(list(argv))
        finally:
            sys.stderr = real_stderr
    except SystemExit as exc:
        return CommandResult(int(exc.code or 0), None, err.getvalue().rstrip("\n"))
    fmt = getattr(args, "format", "json")
    args.seed = getattr(args, "seed", 0)
    args.budget = getattr(args, "budget", DEFAULT_BUDGET)
    try:
        status, payload = args.func(args)
        return CommandResult(status, payload, render(payload, fmt))
    except BudgetExceeded as exc:
        return CommandResult(EXIT_BUDGET, None, f"budget exceeded: {exc}")
    except PrefixTooShort as exc:
        return CommandResult(EXIT_BUDGET, None, f"budget exceeded: prefix_length: {exc}")
    except (UsageError, WindowError, ValueError) as exc:
        usage = parser._subparsers._group_actions[0].choices[args.command].format_usage()
        return CommandResult(EXIT_USAGE, None, f"{usage}error: {exc}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.output:
        stream = sys.stdout if result.payload is not None or result.status == 0 else sys.stderr
        print(result.output, file=stream)
    return result.status


if __name__ == "__main__":
    sys.exit(main())
