"""Exact integer combinatorics used by every other module.

All arithmetic is arbitrary-precision integer arithmetic; nothing here
touches floating point.
"""

from __future__ import annotations

from .errors import PreconditionError


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative rule with exact division at each step.

    Out-of-range k (k < 0 or k > n) yields 0: census and lattice scans probe
    outside the triangle and zero is the consistent extension there.
    """
    if n < 0:
        raise PreconditionError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        # exact: the running product is C(n-k+i, i)
        out = out * (n - k + i) // i
    return out


def falling_factorial(s: int, length: int) -> int:
    """s(s-1)...(s-length+1); the empty product (length 0) is 1."""
    if length < 0:
        raise PreconditionError(f"falling_factorial: length must be nonnegative, got {length}")
    out = 1
    for i in range(length):
        out *= s - i
    return out


def fibonacci(i: int) -> int:
    """F_i with F_0 = 0, F_1 = F_2 = 1, by fast doubling."""
    if i < 0:
        raise PreconditionError(f"fibonacci: index must be nonnegative, got {i}")

    def pair(m: int) -> tuple[int, int]:
        # (F_m, F_{m+1})
        if m == 0:
            return 0, 1
        f, g = pair(m >> 1)
        c = f * (2 * g - f)
        d = f * f + g * g
        if m & 1:
            return d, c + d
        return c, d

    return pair(i)[0]
