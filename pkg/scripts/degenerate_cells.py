#!/usr/bin/env python3
"""How does degenerating the form reshuffle the cell structure?

Fix d and walk the form rank r from nondegenerate (2r = n) down to zero
while keeping the ambient space fixed, printing the cell histogram of each
isotropic Grassmannian next to the ordinary one it sits inside.

Example:
    python scripts/degenerate_cells.py --n 6 --d 2
"""

import argparse
import sys

from degenloci.cells import cell_histogram, verify_restriction_bounds_degenerate


def fmt(hist: dict[int, int]) -> str:
    top = max(hist, default=0)
    return " ".join(str(hist.get(p, 0)) for p in range(top + 1))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--d", type=int, required=True)
    args = parser.parse_args()

    ambient = cell_histogram(args.n, args.d, 0)
    print(f"G({args.d},{args.n}) ranks by dimension: {fmt(ambient)}")
    bad = 0
    for r in range(args.n // 2, 0, -1):
        if args.d > (args.n - 2 * r) + r:
            continue
        hist = cell_histogram(args.n, args.d, r)
        report = verify_restriction_bounds_degenerate(args.n, args.d, r)
        status = "ok" if report.passed else f"VIOLATION: {report.first_violation}"
        bad += 0 if report.passed else 1
        print(f"r={r}  cells {sum(hist.values()):3d}  "
              f"equality through p <= {report.bound}  [{status}]")
        print(f"      ranks by dimension: {fmt(hist)}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
