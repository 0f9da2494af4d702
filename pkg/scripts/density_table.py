"""Print exact partial products of A's window density next to a tail bound."""

import argparse

from jsetlab.bignat import count_A
from jsetlab.density import convergence_report, format_fraction


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-max", type=int, default=5)
    args = ap.parse_args()
    print(f"{'d':>2}  {'count':>24}  {'partial':>10}  {'lower limit':>12}")
    for row in convergence_report(args.d_max):
        count = count_A(row.d) if row.d <= 5 else "-"
        print(f"{row.d:>2}  {str(count):>24}  {float(row.partial):>10.6f}  {float(row.limit_lower):>12.6f}")
    last = convergence_report(args.d_max)[-1]
    print("partial at d_max:", format_fraction(last.partial) if last.d <= 3 else f"{float(last.partial):.12f}")


if __name__ == "__main__":
    main()
