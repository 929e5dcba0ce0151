"""Finding all solutions of C(x,y) = C(x-a,y+b) up to a bound.

Two engines: a window search driven by the zeta bracket (for y > a the
only candidates for x sit in an integer window of width O(a+b)), and an
exhaustive brute sweep kept as the correctness oracle. Solutions with
y <= a live outside the bracket's hypothesis and are scanned directly;
the scan terminates on an exact monotonicity certificate, not a cap.

Everything is integer arithmetic on the cleared-denominator product form

    (x-y)(x-y-1)...(x-y-a-b+1)  =  x(x-1)...(x-a+1) * (y+1)...(y+b)

which is equivalent to the binomial equation whenever x >= y >= 0 and
x-a >= y+b >= 0, and decides the remaining cases by sign alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool

from .combinatorics import binomial, falling_factorial, fibonacci
from .errors import PreconditionError
from .ratios import Interval, ShiftPair, bracket, zeta_poly, isolate_zeta


@dataclass(frozen=True)
class Solution:
    """One equality C(x,y) = C(x-a,y+b) = value; trivial means value <= 1."""

    shift: ShiftPair
    x: int
    y: int
    value: int
    trivial: bool

    def key(self) -> tuple[int, int]:
        return (self.y, self.x)


@dataclass(frozen=True)
class FamilyMember:
    """Member i of the Fibonacci family: C(n+1,k+1) = C(n,k+2) = value."""

    i: int
    n: int
    k: int
    value: int


def _product_sides(x: int, y: int, shift: ShiftPair) -> tuple[int, int]:
    left = falling_factorial(x - y, shift.degree)
    right = falling_factorial(x, shift.a)
    for q in range(1, shift.b + 1):
        right *= y + q
    return left, right


def equality_check(x: int, y: int, shift: ShiftPair) -> bool:
    """Exact test of C(x,y) = C(x-a,y+b) without computing either side."""
    if x < y or y < 0:
        raise PreconditionError(f"equality_check needs x >= y >= 0, got x={x}, y={y}")
    if x - shift.a < y + shift.b:
        # right side is 0 while C(x,y) >= 1
        return False
    left, right = _product_sides(x, y, shift)
    return left == right


def candidate_window(y: int, shift: ShiftPair, zeta: Interval) -> tuple[int, int]:
    """Integer range sure to contain every solution x for this y (y > a).

    Inverting the bracket inequalities: any solution satisfies
    zeta < (x-y)/(y-a+1) and (x-a-y-b+1)/(y+b) < zeta, so
    x > zeta*(y-a+1) + y and x < zeta*(y+b) + y + a + b - 1.
    """
    if y <= shift.a:
        raise PreconditionError(f"candidate_window needs y > a, got y={y}, a={shift.a}")
    lo = math.ceil(zeta.lo * (y - shift.a + 1) + y)
    hi = math.floor(zeta.hi * (y + shift.b) + y + shift.degree - 1)
    return lo, hi


def _make_solution(x: int, y: int, shift: ShiftPair) -> Solution:
    value = binomial(x, y)
    return Solution(shift, x, y, value, value <= 1)


def _scan_cutoff_row(y: int, shift: ShiftPair) -> list[int]:
    """All solution x for a fixed y <= a, scanned from x = y+a+b upward.

    Termination certificate: the ratio left/right of the product sides
    equals C(x-a,y+b)/C(x,y) and satisfies ratio(x+1) > ratio(x) exactly
    when b(x+1) + ay > 0, which always holds here, so once left exceeds
    right after 2(a+b) witnessed increases no further solution can exist.
    """
    d = shift.degree
    x = y + d
    left, right = _product_sides(x, y, shift)
    found = []
    if left == right:
        found.append(x)
    streak = 0
    while not (left > right and streak >= 2 * d):
        prev_left, prev_right = left, right
        x += 1
        left = left * (x - y) // (x - y - d)
        right = right * x // (x - shift.a)
        # the ratio left/right is C(x-a,y+b)/C(x,y); did it increase?
        if left * prev_right > prev_left * right:
            streak += 1
        else:
            streak = 0
        if left == right:
            found.append(x)
    return found


def _scan_window_row(y: int, shift: ShiftPair, zeta: Interval) -> list[int]:
    lo, hi = candidate_window(y, shift, zeta)
    return [x for x in range(max(lo, y), hi + 1) if equality_check(x, y, shift)]


def _search_range(args: tuple[ShiftPair, int, int, Interval]) -> list[Solution]:
    shift, y_lo, y_hi, zeta = args
    out = []
    for y in range(y_lo, y_hi + 1):
        xs = _scan_cutoff_row(y, shift) if y <= shift.a else _scan_window_row(y, shift, zeta)
        out.extend(_make_solution(x, y, shift) for x in xs)
    return out


def search(shift: ShiftPair, y_max: int, workers: int = 1) -> list[Solution]:
    """Every solution with 0 <= y <= y_max, sorted by (y, x).

    The zeta interval is refined until width*(y_max+b) <= 1 so the window
    width stays O(a+b). Workers > 1 split the y-range into contiguous
    chunks; each chunk is pure and the merge is a deterministic sort.
    """
    if y_max < 1:
        raise PreconditionError(f"search needs y_max >= 1, got {y_max}")
    if workers < 1:
        raise PreconditionError(f"search needs workers >= 1, got {workers}")
    zeta = isolate_zeta(shift, Fraction(1, y_max + shift.b))
    chunks = _chunk_ranges(0, y_max, workers)
    args = [(shift, lo, hi, zeta) for lo, hi in chunks]
    if len(args) == 1:
        results = [_search_range(args[0])]
    else:
        with Pool(processes=len(args)) as pool:
            results = pool.map(_search_range, args)
    merged = [s for part in results for s in part]
    return sorted(merged, key=Solution.key)


def _chunk_ranges(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    n = hi - lo + 1
    parts = max(1, min(parts, n))
    size, extra = divmod(n, parts)
    out = []
    start = lo
    for i in range(parts):
        end = start + size - 1 + (1 if i < extra else 0)
        out.append((start, end))
        start = end + 1
    return out


def brute_search(shift: ShiftPair, x_max: int) -> list[Solution]:
    """Exhaustive sweep over 0 <= y <= x <= x_max; the oracle for search."""
    out = []
    for x in range(0, x_max + 1):
        for y in range(0, x + 1):
            if equality_check(x, y, shift):
                out.append(_make_solution(x, y, shift))
    return sorted(out, key=Solution.key)


def _family_nk(i: int) -> tuple[int, int]:
    if i < 1:
        raise PreconditionError(f"family index must be >= 1, got {i}")
    f_23 = fibonacci(2 * i + 3)
    n = fibonacci(2 * i + 2) * f_23 - 1
    k = fibonacci(2 * i) * f_23 - 1
    return n, k


def family_member(i: int) -> FamilyMember:
    """Member i with its exact value C(n+1,k+1).

    The value has on the order of F_{2i+2}F_{2i+3} digits worth of factors;
    beyond i around 8 computing it is expensive. family_verify checks the
    defining identity without ever forming the value.
    """
    n, k = _family_nk(i)
    return FamilyMember(i, n, k, binomial(n + 1, k + 1))


def family_verify(i_max: int) -> bool:
    """Check C(n+1,k+1) = C(n,k+2) for every member i <= i_max.

    Uses the product-form equality at (x,y) = (n+1,k+1) with shift (1,1),
    which is equivalent and needs only word-sized products.
    """
    if i_max < 1:
        raise PreconditionError(f"family_verify needs i_max >= 1, got {i_max}")
    one_one = ShiftPair(1, 1)
    for i in range(1, i_max + 1):
        n, k = _family_nk(i)
        if not equality_check(n + 1, k + 1, one_one):
            return False
    return True


def convergent_bracket_check(i: int) -> bool:
    """Bracket endpoints at family member i are consecutive Fibonacci quotients.

    At (x,y) = (n+1,k+1) the bracket is (F_{2i+2}/F_{2i+1}, F_{2i+1}/F_{2i})
    after reduction, and the endpoints straddle the golden ratio (checked by
    the exact sign of t^2 - t - 1, no floating point).
    """
    n, k = _family_nk(i)
    shift = ShiftPair(1, 1)
    lo, hi = bracket(n + 1, k + 1, shift)
    expected_lo = Fraction(fibonacci(2 * i + 2), fibonacci(2 * i + 1))
    expected_hi = Fraction(fibonacci(2 * i + 1), fibonacci(2 * i))
    p = zeta_poly(shift)
    return lo == expected_lo and hi == expected_hi and p.sign_at(lo) < 0 < p.sign_at(hi)
