"""Recompute both degree bounds and print the integer comparisons around them.

    python scripts/reproduce_bounds.py [--window 3]
"""

import argparse

from linarr import bounds
from linarr.envelope import free_envelope, pog_envelope, pog_minimal_h


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--window", type=int, default=3, help="degrees shown on each side of a bound")
    args = ap.parse_args()

    d_free = bounds.theorem_main_bound()
    print(f"free, multiplicities <= 5: d <= {d_free}")
    for d in range(d_free - args.window + 1, d_free + args.window + 1):
        lhs, rhs = bounds.main_bound_sides(d)
        verdict = "feasible" if free_envelope(d).feasible else "infeasible"
        print(f"  d={d}: 25(d-3)(d-19) = {lhs} {'<=' if lhs <= rhs else '> '} 24(d(d-1)-16) = {rhs}  [{verdict}]")

    d_pog = bounds.theorem_c_bound()
    print(f"plus-one generated, multiplicities <= 4: d <= {d_pog}")
    for d in range(d_pog - args.window + 1, d_pog + args.window + 1):
        lhs, rhs = bounds.theorem_c_sides(d)
        h = pog_minimal_h(d)
        verdict = "feasible" if pog_envelope(d).feasible else "infeasible"
        print(f"  d={d}: (d-11)^2 = {lhs} {'<=' if lhs <= rhs else '> '} 4(2+7d) = {rhs}  "
              f"minimal h = {h}  [{verdict}]")

    print("largest d allowed for a given h (d^2 - 22d + 57 - 28h <= 0):")
    for h in (1, 2, 5, 10, 20, 45):
        print(f"  h={h}: d <= {bounds.pog_d_bound_from_h(h)}")


if __name__ == "__main__":
    main()
