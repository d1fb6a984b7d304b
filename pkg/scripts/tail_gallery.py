"""Right-tail classification across all generator families and lambda signs.

Prints the tail index, density form, and heaviness category for each
(family, lambda) combination, optionally cross-checked against an empirical
survival-function slope.

    python3 scripts/tail_gallery.py --sigma 0.5 --verify
"""

import argparse
import math
import sys

from bcsym import BcsParams, DensityFamily, classify, empirical_tail_slope

FAMILIES = (
    DensityFamily.normal(),
    DensityFamily.double_exponential(),
    DensityFamily.power_exponential(1.5),
    DensityFamily.logistic_i(),
    DensityFamily.logistic_ii(),
    DensityFamily.student_t(4.0),
    DensityFamily.cauchy(),
    DensityFamily.canonical_slash(),
    DensityFamily.slash(2.0),
)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--mu", type=float, default=1.0)
    ap.add_argument("--sigma", type=float, default=0.5)
    ap.add_argument("--lambdas", default="-0.5,0,0.5")
    ap.add_argument("--verify", action="store_true",
                    help="probe each survival function for an empirical slope")
    args = ap.parse_args(argv)

    lams = [float(tok) for tok in args.lambdas.split(",")]
    header = f"{'family':>22} {'lambda':>7} {'index':>7} {'form':>10} {'category':>22}"
    if args.verify:
        header += f" {'probe 1/xi':>11}"
    print(header)
    for family in FAMILIES:
        for lam in lams:
            params = BcsParams(args.mu, args.sigma, lam, family)
            rep = classify(params)
            idx = "inf" if math.isinf(rep.index) else f"{rep.index:.3f}"
            line = (f"{family.label():>22} {lam:7.2f} {idx:>7} "
                    f"{rep.form.kind:>10} {rep.category.value:>22}")
            if args.verify:
                try:
                    slope = empirical_tail_slope(params)
                    line += f" {-1.0 / slope:11.4f}"
                except (ValueError, OverflowError):
                    line += f" {'-':>11}"
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
