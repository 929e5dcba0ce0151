"""Count how often a value appears in Pascal's triangle.

N(t) is the number of positions (n,k) with C(n,k) = t. Singmaster's
conjecture says N(t) stays bounded; the current record holder is
N(3003) = 8, and 3003 is also the first member of the infinite family.
High multiplicity means several shift curves crossing at one point, so
the demo finishes by intersecting two curves that meet at C(120,1).
"""

from pascalrepeats import ShiftPair, intersect_curves, multiplicity, scan_high_multiplicity


def main() -> None:
    print("Multiplicity of some well-known repeats:")
    for t in (6, 10, 120, 210, 3003):
        rec = multiplicity(t)
        occ = " ".join(f"({n},{k})" for n, k in rec.occurrences)
        print(f"  N({t}) = {rec.count}:  {occ}")

    print()
    print("Every t <= 100000 with N(t) >= 6:")
    for rec in scan_high_multiplicity(10**5, 6):
        print(f"  t={rec.t:6d}  N={rec.count}")

    print()
    print("And the only t <= 10000 with N(t) >= 8:")
    for rec in scan_high_multiplicity(10**4, 8):
        print(f"  t={rec.t}  N={rec.count}")

    print()
    print("120 = C(120,1) = C(16,2) = C(10,3) means the curves of shifts")
    print("(104,1) and (110,2) both pass through (x,y) = (120,1):")
    points = intersect_curves(ShiftPair(104, 1), ShiftPair(110, 2), 200)
    print(f"  common solutions with x <= 200: {points}")


if __name__ == "__main__":
    main()
