#!/usr/bin/env python3
"""Scan the open circulant cases (gcd(n, q) != 1) for counterexamples.

Two open claims are probed on every cell:

* orbit constancy: is the determinant tally constant on each class
  {b * gamma^s : b a unit}?
* unit coverage: is every unit attained as a circulant determinant?

Both fail over equal-characteristic rings F_q[u]/(u^e) with e >= 2 once
the characteristic divides n: there the determinant lands in the image of
the p-power map, which misses every unit with a nonzero u-part.  Exits 3
when a counterexample is found, mirroring the CLI.
"""

import argparse
import math
import sys

from chaindet.census import scan_conjecture
from chaindet.ringspec import parse_ring_list

DEFAULT_RINGS = (
    "Z/4,Z/8,Z/9,Z/27,F2[u]/u^2,F2[u]/u^3,F3[u]/u^2,F4[u]/u^2,"
    "GR(4,2),GR(9,2)"
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rings", default=DEFAULT_RINGS)
    parser.add_argument("--n-max", type=int, default=4)
    args = parser.parse_args()

    rings = parse_ring_list(args.rings)
    cells = [(r, n) for r in rings for n in range(1, args.n_max + 1)
             if math.gcd(n, r.q) != 1 and r.size**n <= 10**7]
    found = False
    for name in ("orbit-without-gcd", "unit-coverage"):
        report = scan_conjecture(name, cells)
        print(f"== {name}: {len(report.cells)} cells ==")
        for cell in report.cells:
            if cell.status != "skipped":
                print(f"  {cell.ring:<12} n={cell.n}  {cell.status}"
                      + (f"  [{cell.detail}]"
                         if cell.status == "counterexample" else ""))
        found = found or report.has_counterexample
    return 3 if found else 0


if __name__ == "__main__":
    sys.exit(main())
