#!/usr/bin/env python3
"""Reproduce the weighted cyclic matrix pseudospectrum figure.

The 6x6 cyclic matrix with weights (1e6, 1, 1, 1, 1, 1) has a local minimum
of the resolvent norm at the origin with ||R(0)|| = 1e6; at epsilon just
below 1e-6 the pseudospectrum surrounds the origin without containing it.

Usage: python scripts/reproduce_figure2.py [out.svg]
"""

import json
import sys

import numpy as np

from resolventlab.builders import cyclic_matrix
from resolventlab.gap import spectral_gap_report
from resolventlab.growth import min_candidate_check
from resolventlab.matcore import resolvent_norm
from resolventlab.pspec import Region, membership, scan
from resolventlab.svgout import render_svg

OUT = sys.argv[1] if len(sys.argv) > 1 else "figure2.svg"
EPSILON = 9.9966e-7


def main():
    a = cyclic_matrix([1e6] + [1.0] * 5)
    print(f"||R(0)|| = {resolvent_norm(a, 0).norm:.6e}")
    report = spectral_gap_report(a, 0)
    check = min_candidate_check(a, 0, report)
    print(json.dumps({"holds": check.holds, "prp_norm": check.prp_norm,
                      "zero_in_range": check.zero_in_range}, indent=2))
    print(f"membership(0, {EPSILON:g}) = {membership(a, 0, EPSILON)}")
    region = Region(-0.15, 0.15, -0.15, 0.15, 400, 400)
    grid = scan(a, region)
    with open(OUT, "w", encoding="utf-8") as fh:
        fh.write(render_svg(grid, [EPSILON], np.linalg.eigvals(a)))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
