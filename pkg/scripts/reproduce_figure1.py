#!/usr/bin/env python3
"""Reproduce the norm-1 block-diagonal pseudospectrum figure.

Builds the 6x6 block matrix whose resolvent norm has a local minimum at the
origin, scans the window around the origin, and writes an SVG with the
epsilon = 0.97 sublevel band and eigenvalue markers. Prints the minimum
certificate for the origin.

Usage: python scripts/reproduce_figure1.py [out.svg]
"""

import json
import sys

import numpy as np

from resolventlab.builders import example_last
from resolventlab.growth import certify_local_min
from resolventlab.matcore import resolvent_norm
from resolventlab.pspec import Region, scan
from resolventlab.svgout import render_svg

OUT = sys.argv[1] if len(sys.argv) > 1 else "figure1.svg"


def main():
    b = example_last()
    print(f"||R(0)|| = {resolvent_norm(b, 0).norm:.12f}")
    cert = certify_local_min(b, 0, radius=0.05, n_angles=720)
    print(json.dumps({"is_min": cert.is_min, "margin": cert.margin,
                      "norm_at_center": cert.norm_at_center}, indent=2))
    region = Region(-2.0, 2.0, -2.0, 2.0, 400, 400)
    grid = scan(b, region)
    with open(OUT, "w", encoding="utf-8") as fh:
        fh.write(render_svg(grid, [0.97], np.linalg.eigvals(b)))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
