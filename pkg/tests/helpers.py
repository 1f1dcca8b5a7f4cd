"""Independent oracles shared by the tests.

Nothing here may call into the production DP/closed-form paths: counts are
recomputed by plain recursive enumeration so the two sides stay honest.
"""
from __future__ import annotations

from math import gcd


def brute_counts(denoms: tuple[int, ...], bound: int) -> list[int]:
    """Representation counts by exhaustive recursion over coin multiplicities."""
    counts = [0] * (bound + 1)

    def rec(i: int, total: int) -> None:
        if i == len(denoms):
            counts[total] += 1
            return
        a = denoms[i]
        t = total
        while t <= bound:
            rec(i + 1, t)
            t += a

    rec(0, 0)
    return counts


def totient(n: int) -> int:
    result = n
    m = n
    f = 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


def coprime_pairs(max_b: int) -> list[tuple[int, int]]:
    """All pairs a < b <= max_b with gcd(a, b) = 1."""
    return [(a, b) for b in range(2, max_b + 1) for a in range(1, b) if gcd(a, b) == 1]


PRIMES_TO_30 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
