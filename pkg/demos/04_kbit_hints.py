"""k-bit hints: a k-bit index into 2^k phase-shifted strategies narrows the
gap to the unhintable floor of 3.

Prints the closed-form consistency per k with the measured value beside it,
the diminishing return of each extra bit, and the line partition saying
which member index is the right hint where.
"""

import argparse
import sys

from cowpath.bounds import kbit_consistency_upper, kbit_floor, onebit_lower
from cowpath.hints import kbit_family, preferred_partition
from cowpath.ratios import evaluate_hinted


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r", type=float, default=9.0)
    parser.add_argument("--max-distance", type=float, default=16.0)
    args = parser.parse_args(argv)

    print(f"consistency per hint width at robustness budget r={args.r:g}:")
    for k in (1, 2, 3):
        upper = kbit_consistency_upper(args.r, k)
        point = evaluate_hinted(kbit_family(args.r, k))
        print(
            f"  k={k}  closed={upper:.6f}  measured={point.consistency:.6f} "
            f" robustness={point.robustness:.6f}"
        )
    print(f"one-bit lower bound: {onebit_lower(args.r).value:.6f} "
          f"({onebit_lower(args.r).scope})")
    print(f"floor for any finite hint string: {kbit_floor().value:g}")

    part = preferred_partition(args.r, 1, args.max_distance)
    print(f"best member index per target cell (k=1, up to {args.max_distance:g}):")
    for branch in (0, 1):
        cells = ", ".join(
            f"({iv.lo:.4g}, {iv.hi:.4g}]->{iv.label}"
            for iv in part.intervals(branch)
        )
        print(f"  branch {branch}: {cells}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
