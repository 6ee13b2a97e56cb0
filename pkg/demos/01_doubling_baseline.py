"""Baseline without hints: doubling is 9-competitive and no geometric
strategy does better.

Walks the per-iteration ratio terms of the doubling strategy (they climb
toward 9 from below), cross-checks the closed form against brute-force
simulation, then scans other bases to show the minimum sits at b = 2.
"""

import argparse
import sys

import numpy as np

from cowpath.model import make_geometric
from cowpath.ratios import (
    competitive_ratio,
    competitive_ratio_measured,
    competitive_ratio_terms,
)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--horizon", type=int, default=64)
    args = parser.parse_args(argv)

    doubling = make_geometric(2.0, args.horizon)
    terms = competitive_ratio_terms(doubling)
    print("doubling strategy, ratio term per iteration (worst target just")
    print("past the previous turn point):")
    for i in (0, 1, 2, 3, 5, 8, 12):
        print(f"  i={i:2d}  term={terms[i]:.9f}")
    print(f"  sup over all iterations = {float(np.max(terms)):.9f}")

    closed = competitive_ratio(doubling)
    measured = competitive_ratio_measured(doubling)
    print(f"closed form: {closed:.12f}")
    print(f"simulated:   {measured:.12f}")
    print(f"|difference| = {abs(closed - measured):.3g}")

    print("other bases (closed form; limit is 1 + 2b^2/(b-1)):")
    for b in (1.5, 1.8, 2.0, 2.5, 3.0, 4.0):
        cr = competitive_ratio(make_geometric(b, args.horizon))
        marker = "  <- minimum" if b == 2.0 else ""
        print(f"  b={b:.1f}  cr={cr:.6f}{marker}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
