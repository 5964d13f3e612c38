#!/usr/bin/env python3
"""Sample random small representations over one prime field and tabulate
how geometric and action-type equivalence verdicts relate.

Usage: python3 scripts/equivalence_survey.py [--n 12] [--p 2] [--seed 0]
"""

import argparse
import random
from collections import Counter

from repgeo import Equivalent, NotEquivalent, at_equivalent, geo_equivalent
from repgeo.sampling import random_representation


def verdict_name(v) -> str:
    if isinstance(v, Equivalent):
        return "equivalent"
    if isinstance(v, NotEquivalent):
        return "not-equivalent"
    return "unknown"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=12, help="number of sampled representations")
    ap.add_argument("--p", type=int, default=2, choices=(2, 3))
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    reps = [
        random_representation(rng, primes=(args.p,), dims=(1, 2))
        for _ in range(args.n)
    ]
    table: Counter = Counter()
    for i in range(args.n):
        for j in range(i + 1, args.n):
            g = verdict_name(geo_equivalent(reps[i], reps[j], search_qid=False))
            a = verdict_name(at_equivalent(reps[i], reps[j]))
            table[(g, a)] += 1
            if g == "equivalent" and a == "not-equivalent":
                raise SystemExit(
                    f"violation: pair ({i},{j}) geometrically equivalent "
                    "but action-type inequivalent"
                )
    print(f"{args.n} representations over GF({args.p}), "
          f"{args.n * (args.n - 1) // 2} pairs")
    print(f"{'geometric':>16}  {'action-type':>14}  count")
    for (g, a), c in sorted(table.items()):
        print(f"{g:>16}  {a:>14}  {c}")
    print("consistency: no pair was geometrically equivalent while "
          "action-type inequivalent")


if __name__ == "__main__":
    main()
