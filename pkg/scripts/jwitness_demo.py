"""Build J-set witnesses for A from random affine sequences and report sizes."""

import argparse
import random

from jsetlab.constructive import jwitness_for_A, prefix_budget
from jsetlab.jset import SequencePrefix, chi_reduced
from jsetlab.replay import member_by_definition


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=2, help="number of sequences")
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    length = prefix_budget(args.n)
    for _ in range(args.trials):
        specs = [(rng.randint(-99, 99), rng.randint(-10**4, 10**4)) for _ in range(args.n)]
        F = [SequencePrefix.affine(p, q, length) for p, q in specs]
        w = jwitness_for_A(F)
        values = [chi_reduced(w, f) for f in F]
        assert all(member_by_definition(v) for v in values)
        print(f"{specs}  m={w.m}  t[-1]={w.t[-1]}  shift bits={sum(w.a).bit_length()}")


if __name__ == "__main__":
    main()
