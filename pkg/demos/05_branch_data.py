"""Trace the real branches of a shift curve and dump plot-ready data.

For each y the curve F(x,y)=0 has at most a+b real x-values; the root
isolator encloses every one of them in a rational interval of width
1e-13, entirely without floating point. The CSV written at the end
renders each enclosure midpoint with 12 decimals, which is how the
asymptote x ~ (zeta+1) y becomes visible, and how integer solutions
show up as exactly-integral rows.
"""

import csv
import sys
from fractions import Fraction

from pascalrepeats import ShiftPair, isolate_zeta, lattice_points_in_box, real_branches


def main() -> None:
    shift = ShiftPair(1, 1)
    width = Fraction(1, 10**13)

    print("Integer points of the (1,1) curve in the box x,y <= 16:")
    print(f"  {lattice_points_in_box(shift, (0, 16), (0, 16))}")
    print("(the x<a corner block sits on the curve; inside the triangle, x>=a")
    print(" points are exactly the equation's solutions)")

    zeta = isolate_zeta(shift, Fraction(1, 10**12))
    slope = float(zeta.midpoint) + 1
    print()
    print(f"Upper branch slope should approach zeta+1 ~ {slope:.6f}:")
    for y, enclosures in real_branches(shift, [5, 50, 500], width=width):
        top = max(enclosures, key=lambda iv: iv.lo)
        print(f"  y={y}:  x ~ {float(top.midpoint):16.6f}   x/y ~ {float(top.midpoint / y):.6f}")

    rows = []
    for y, enclosures in real_branches(shift, range(0, 26), width=width):
        for iv in enclosures:
            rows.append((f"{float(y):.12f}", f"{float(iv.midpoint):.12f}"))

    writer = csv.writer(sys.stdout, lineterminator="\n")
    print()
    print("branch data, y <= 25 (pipe into a plotter of your choice):")
    writer.writerow(["y", "x"])
    writer.writerows(rows)


if __name__ == "__main__":
    main()
