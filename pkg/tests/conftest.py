"""Shared brute-force oracles, deliberately independent of the package code."""

from __future__ import annotations

import math


def naive_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def fourth_power_residues(p: int) -> list[int]:
    """Quartic residues mod p as the set of fourth powers, sorted."""
    return sorted({pow(y, 4, p) for y in range(1, p)})


def square_residues(p: int) -> list[int]:
    return sorted({pow(y, 2, p) for y in range(1, p)})


def walk_classes(p: int, g: int) -> dict[int, int]:
    """x -> k mod 4 where x = g**k, by explicit iteration."""
    out = {}
    x = 1
    for k in range(p - 1):
        out[x] = k % 4
        x = x * g % p
    return out


def primes_5mod8_trial(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if n % 8 == 5 and naive_is_prime(n)]


def interval_counts(p: int, values) -> list[int]:
    counts = [0, 0, 0, 0]
    for x in values:
        counts[4 * x // p] += 1
    return counts
