#!/usr/bin/env python3
"""Sweep graded ring tables over a parameter range and print the Hilbert
functions side by side, flagging any torsion on sight.

Examples:
    python scripts/ring_tables.py --family grassmannian --max-n 6
    python scripts/ring_tables.py --family isotropic --max-r 4 --csv
"""

import argparse
import sys

from degenloci.rings import (
    graded_table,
    grassmannian_dimension,
    grassmannian_presentation,
    isotropic_dimension,
    isotropic_presentation,
)


def iter_cases(args):
    if args.family == "grassmannian":
        for n in range(1, args.max_n + 1):
            for d in range(1, n + 1):
                yield f"G({d},{n})", grassmannian_presentation(d, n), \
                    grassmannian_dimension(d, n)
    else:
        for r in range(1, args.max_r + 1):
            for d in range(1, r + 1):
                yield f"LG({d},{r})", isotropic_presentation(d, r), \
                    isotropic_dimension(d, r)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--family", choices=("grassmannian", "isotropic"),
                        default="grassmannian")
    parser.add_argument("--max-n", type=int, default=6,
                        help="largest ambient rank (grassmannian family)")
    parser.add_argument("--max-r", type=int, default=4,
                        help="largest form rank (isotropic family)")
    parser.add_argument("--csv", action="store_true",
                        help="one line per space: label, rank sequence")
    args = parser.parse_args()

    torsion_seen = False
    for label, pres, dim in iter_cases(args):
        table = graded_table(pres, 2 * dim)
        ranks = [table.rank(2 * q) for q in range(dim + 1)]
        if args.csv:
            print(f"{label},{' '.join(str(b) for b in ranks)}")
        else:
            print(f"{label}  dim {dim}")
            print(f"  ranks by half-degree: {ranks}")
            print(f"  total rank: {sum(ranks)}")
        if not table.torsion_free():
            torsion_seen = True
            print(f"  TORSION in {label}: "
                  f"{[list(row.torsion) for row in table.rows if row.torsion]}",
                  file=sys.stderr)
    return 1 if torsion_seen else 0


if __name__ == "__main__":
    sys.exit(main())
