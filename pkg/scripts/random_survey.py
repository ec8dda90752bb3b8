"""Classify seeded random arrangements and tabulate types, exponents and checks.

    python scripts/random_survey.py --d-min 3 --d-max 7 --count 20 --seed 0
"""

import argparse
from collections import Counter

from linarr import syzygy
from linarr.arrangement import profile, random_arrangement, tau_combinatorial
from linarr.classify import report_from_analysis
from linarr.cli import failed_checks, theorem_checks


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d-min", type=int, default=3)
    ap.add_argument("--d-max", type=int, default=7)
    ap.add_argument("--count", type=int, default=20, help="arrangements per degree")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--coeff-bound", type=int, default=3)
    args = ap.parse_args()

    print(f"{'d':>3} {'free':>5} {'pog':>5} {'other':>6} {'tau ok':>7} {'violations':>10}  exponents seen")
    for d in range(args.d_min, args.d_max + 1):
        kinds = Counter()
        exps = Counter()
        tau_ok = bad = 0
        for i in range(args.count):
            a = random_arrangement(d, f"{args.seed}:{d}:{i}", args.coeff_bound)
            p = profile(a)
            an = syzygy.analyze(a)
            c = report_from_analysis(an)
            kinds["free" if c.is_free else "pog" if c.is_pog else "other"] += 1
            exps[c.exponents] += 1
            tau_ok += an.tau == tau_combinatorial(p)
            bad += len(failed_checks(theorem_checks(p, c)))
        common = ", ".join(f"{e}x{n}" for e, n in exps.most_common(3))
        print(f"{d:>3} {kinds['free']:>5} {kinds['pog']:>5} {kinds['other']:>6} "
              f"{tau_ok:>4}/{args.count:<2} {bad:>10}  {common}")


if __name__ == "__main__":
    main()
