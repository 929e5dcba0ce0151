"""Why the golden ratio governs the repeats of C(x,y) = C(x-1,y+1).

At any deep solution, two consecutive coefficient ratios in row x-1
pin the golden ratio phi between them, and those two rationals turn out
to be consecutive continued-fraction convergents F(j+1)/F(j). This demo
isolates phi exactly, prints the brackets at each known solution, and
shows the rational-root witness that phi (and every other limiting
ratio zeta) is irrational.
"""

from fractions import Fraction

from pascalrepeats import (
    ShiftPair,
    bracket,
    convergent_bracket_check,
    irrationality_check,
    isolate_zeta,
    search,
    zeta_poly,
)
from pascalrepeats.polynomials import format_unipoly


def main() -> None:
    shift = ShiftPair(1, 1)

    p = zeta_poly(shift)
    print(f"zeta(1,1) is the positive root of {format_unipoly(p, 't')} = 0, i.e. phi.")
    enclosure = isolate_zeta(shift, Fraction(1, 10**15))
    print(f"  exact enclosure: [{enclosure.lo}, {enclosure.hi}]")
    print(f"  width <= 1e-15, midpoint ~ {float(enclosure.midpoint):.15f}")

    witness = irrationality_check(shift)
    print(f"  rational-root witness (candidates +-1): {witness.candidate_values} -> irrational={bool(witness)}")

    print()
    print("Brackets lo < phi < hi at each solution (successive Fibonacci quotients):")
    for s in search(shift, 2000):
        if s.trivial:
            continue
        lo, hi = bracket(s.x, s.y, shift)
        inside = lo < enclosure.lo and enclosure.hi < hi
        print(f"  (x,y)=({s.x},{s.y}):  {lo} < phi < {hi}   strict={inside}")

    print()
    print("Convergent structure check for the first six family members:")
    for i in range(1, 7):
        print(f"  member {i}: endpoints are F(2i+2)/F(2i+1), F(2i+1)/F(2i) "
              f"and straddle phi -> {convergent_bracket_check(i)}")

    print()
    print("Other shifts get other algebraic numbers, never rational:")
    for a, b in [(1, 2), (2, 1), (2, 3)]:
        z = isolate_zeta(ShiftPair(a, b), Fraction(1, 10**12))
        print(f"  zeta({a},{b}) ~ {float(z.midpoint):.12f}")


if __name__ == "__main__":
    main()
