#!/usr/bin/env python3
"""Where does restriction from the ordinary to the isotropic Grassmannian
stop being bijective?

For every d <= r up to a bound, compare the first half-degree where ranks
drift apart with the guaranteed window p <= 2(r-d)+1, and report how much
slack the guarantee leaves on each space.

Example:
    python scripts/restriction_sweep.py --max-r 5
"""

import argparse
import sys

from degenloci.errors import VerificationError
from degenloci.rings import restriction_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-r", type=int, default=5)
    args = parser.parse_args()

    print("d  r  guaranteed  first_non_bijective  slack")
    failures = 0
    for r in range(1, args.max_r + 1):
        for d in range(1, r + 1):
            try:
                report = restriction_report(d, 2 * r, r)
            except VerificationError as exc:
                failures += 1
                print(f"{d}  {r}  VERIFICATION FAILED: {exc}", file=sys.stderr)
                continue
            first = report.first_non_bijective
            if first is None:
                print(f"{d}  {r}  {report.bound:10d}  "
                      f"{'never':>19}  bijective everywhere")
            else:
                print(f"{d}  {r}  {report.bound:10d}  {first:19d}  "
                      f"{first - report.bound - 1}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
