#!/usr/bin/env python3
"""ASCII picture of the coefficient Mackey-functor chart.

Each lattice point (p, q) is one character:

    F   the fixed-cone shape (the span of a^k u^n in that degree)
    .   a single dot (one copy of the field at the point level)
    L   the dual shape on the negative cone
    (blank)  the zero spot

Usage: python3 scripts/print_chart.py [--pmin -12] [--pmax 12] ...
"""

import argparse
import sys

from conjspaces.coefficients import chart_lookup
from conjspaces.degree import RODegree

GLYPH = {"Fbar": "F", "dot": ".", "L": "L", "0": " "}


def render(pmin, pmax, qmin, qmax, out=sys.stdout):
    width = max(len(str(pmin)), len(str(pmax)), 1)
    header = " " * 6 + "".join(f"{p:>{width + 1}}" for p in range(pmin, pmax + 1))
    print(header, file=out)
    for q in range(qmax, qmin - 1, -1):
        cells = []
        for p in range(pmin, pmax + 1):
            glyph = GLYPH[chart_lookup(RODegree(p, q)).tag]
            cells.append(glyph.rjust(width + 1))
        print(f"{q:>5} " + "".join(cells), file=out)
    print(file=out)
    print("rows: coefficient of al; columns: integer part", file=out)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pmin", type=int, default=-12)
    ap.add_argument("--pmax", type=int, default=12)
    ap.add_argument("--qmin", type=int, default=-12)
    ap.add_argument("--qmax", type=int, default=12)
    args = ap.parse_args(argv)
    if args.pmin > args.pmax or args.qmin > args.qmax:
        ap.error("empty window")
    render(args.pmin, args.pmax, args.qmin, args.qmax)
    return 0


if __name__ == "__main__":
    sys.exit(main())
