#!/usr/bin/env python3
"""Emit the max-payload surface over tool angle and grasp offset as CSV.

Reproduces the design study behind the payload module: how far from the
center of mass can the gripper grab, and at what tool angle, while still
lifting a useful weight. Feed the output to any CSV plotter.

Usage:
    python scripts/payload_surface.py designs/example_tool.ini > surface.csv
"""

import argparse
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from grippertool import parse_design, payload_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("design", help="design file")
    ap.add_argument("--alpha-deg", type=float, nargs=3, default=(5.0, 85.0, 5.0),
                    metavar=("START", "STOP", "STEP"))
    ap.add_argument("--d", type=float, nargs=3, default=(0.0, 0.1, 0.005),
                    metavar=("START", "STOP", "STEP"))
    ap.add_argument("--d-obj", type=float, default=0.05,
                    help="object moment arm in meters")
    args = ap.parse_args()

    _, _, model, state = parse_design(Path(args.design).read_text(encoding="utf-8"))

    a0, a1, da = args.alpha_deg
    d0, d1, dd = args.d
    alphas = [math.radians(a0 + i * da)
              for i in range(int(round((a1 - a0) / da)) + 1)]
    ds = [d0 + i * dd for i in range(int(round((d1 - d0) / dd)) + 1)]

    print("alpha_deg,d_m,max_weight_N")
    for alpha, d, weight in payload_sweep(model, state, args.d_obj, alphas, ds):
        cell = "INFEASIBLE" if weight is None else f"{weight:.9g}"
        print(f"{math.degrees(alpha):.9g},{d:.9g},{cell}")


if __name__ == "__main__":
    main()
