#!/usr/bin/env python3
"""Survey the n!-scaled volumes of all five polytope families.

For each family and n the volume is computed three ways (simplex closed
forms, subdivision pieces, exhaustive subgraph sweep) plus a determinant
pass at fixed parameters, and the agreement is reported with timings.

Usage:
    python scripts/volume_survey.py [--nmax 5] [--q 1/2] [--t 1]
"""

import argparse
import time

from cayleypoly import FAMILIES, parse_rational, volume_report


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--nmax", type=int, default=5)
    parser.add_argument("--q", type=parse_rational, default=parse_rational("1/2"))
    parser.add_argument("--t", type=parse_rational, default=parse_rational("1"))
    args = parser.parse_args()

    for n in range(1, args.nmax + 1):
        for family in FAMILIES:
            started = time.time()
            report = volume_report(family, n, args.q, args.t)
            elapsed = time.time() - started
            value = report.by_determinant
            status = "agree" if report.agree() else "MISMATCH"
            print(
                f"n={n}  {family:8s}  n!vol({report.q},{report.t}) = {value}"
                f"  [{status}, {elapsed:.2f}s]"
            )
        print()


if __name__ == "__main__":
    main()
