"""Print EKR bounds for Johnson and Hamming presets next to their closed forms.

usage: python3 scripts/bound_table.py [--max-d 4]
"""

import argparse

from leonard_ekr import (EkrSystem, bound_closed_form, build, dual_vector, hamming_preset,
                         johnson_preset, realize)


def rows(max_d):
    for d in range(2, max_d + 1):
        for v in (2 * d + 1, 2 * d + 3):
            yield f"J({v},{d})", johnson_preset(v, d)
        for n in (2, 3):
            yield f"H({d},{n})", hamming_preset(n, d)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-d", type=int, default=4)
    args = ap.parse_args()
    print(f"{'graph':10} {'t':>2} {'bound':>8} {'closed':>8} feasible")
    for label, params in rows(args.max_d):
        sys_ = EkrSystem.build(realize(build(params)))
        for t in range(1, params.d):
            dv = dual_vector(sys_, t)
            print(f"{label:10} {t:>2} {str(dv.bound):>8} {str(bound_closed_form(params, t)):>8} "
                  f"{dv.feasible}")


if __name__ == "__main__":
    main()
