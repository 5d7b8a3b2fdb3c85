#!/usr/bin/env python3
"""Dump the circle-mean profile of |f|^q and its second derivative.

Plot y against phi2 to see the convexity that drives the sufficiency
argument: for q >= 2 the column should stay nonnegative up to finite
difference noise.
"""
import argparse
import csv
import sys

import numpy as np

from berglab.inequalities import phi_profile
from berglab.poly import parse_polynomial


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--poly", default="1,1")
    ap.add_argument("--q", type=float, default=4.0)
    ap.add_argument("--ymin", type=float, default=0.02)
    ap.add_argument("--ymax", type=float, default=0.95)
    ap.add_argument("--count", type=int, default=120)
    ap.add_argument("--fd-step", type=float, default=1e-3, dest="fd_step")
    ap.add_argument("--out", default=None)
    args = ap.parse_args(argv)

    f = parse_polynomial(args.poly)
    prof = phi_profile(f, args.q, np.linspace(args.ymin, args.ymax, args.count),
                       h=args.fd_step)

    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["y", "phi", "phi2"])
        for y, v, v2 in zip(prof.y_grid, prof.phi, prof.phi2):
            writer.writerow([repr(y), repr(v), repr(v2)])
    finally:
        if args.out:
            out.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
