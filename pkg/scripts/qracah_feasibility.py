"""Scan small rational q-Racah parameters and count feasible LP duals per t.

The closed forms do not guarantee f_{t+1..d} >= 0 outside the graph case;
this measures how often it holds on a grid.

usage: python3 scripts/qracah_feasibility.py [--d 3] [--seed 0] [--samples 200]
"""

import argparse
import random
from collections import Counter
from fractions import Fraction

from leonard_ekr import EkrSystem, InvalidParameterArray, QRacahParams, build, dual_vector, realize


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=200)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    feasible, total, skipped = Counter(), 0, 0

    def pick():
        return Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 5))

    for _ in range(args.samples):
        q = rng.choice([Fraction(1, 3), Fraction(1, 2), Fraction(2), Fraction(3)])
        try:
            params = QRacahParams.with_r2_from_constraint(args.d, q, pick(), pick(), pick())
            sys_ = EkrSystem.build(realize(build(params)))
        except InvalidParameterArray:
            skipped += 1
            continue
        total += 1
        for t in range(args.d + 1):
            feasible[t] += dual_vector(sys_, t).feasible
    print(f"valid arrays {total}, skipped {skipped}")
    for t in range(args.d + 1):
        print(f"t={t}: feasible {feasible[t]}/{total}")


if __name__ == "__main__":
    main()
