"""Blockers against piecewise syndeticity of A, for every H of a given size.

For each H in {0..h_max} with |H| = m, probe windows of length 2^(2^(m+1))
and report one blocker per probe.  Every y is checked against the bit
definition of A.
"""

import argparse
import itertools
import random

from jsetlab.constructive import blocker_period, refute_piecewise_syndetic
from jsetlab.replay import member_by_definition


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--h-max", type=int, default=7)
    ap.add_argument("--probes", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    n = blocker_period(args.m)
    worst = 0
    total = 0
    for H in itertools.combinations(range(args.h_max + 1), args.m):
        probes = [rng.randrange(1 << 40) for _ in range(args.probes)]
        for cert in refute_piecewise_syndetic(H, probes):
            assert not any(member_by_definition(cert.y + c) for c in H)
            worst = max(worst, cert.y - cert.x)
            total += 1
    print(f"m={args.m}: {total} blockers, window {n}, largest gap y-x = {worst}")


if __name__ == "__main__":
    main()
