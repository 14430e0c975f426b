"""Pure-Python kernel implementations.

Dependency-free big-int walks, used as the correctness baseline for the
accelerated backends and as the QUARTIC_LATIN_BACKEND=python fallback.
Only practical for small p.
"""

from __future__ import annotations

import numpy as np


def walk_tallies(p: int, g: int):
    """Tally one full walk x = g**k, k = 0 .. p-2, into the count tables.

    Index trick: s16 = (16*x) // p never lands on a boundary because
    gcd(16, p) = 1, and s16 >> 2 is the quarter-interval index,
    s16 >> 1 the eighth-interval index.
    """
    M = [[0] * 4 for _ in range(4)]
    N = [[0] * 4 for _ in range(4)]
    bh = [[0] * 4 for _ in range(4)]
    th = [[0] * 4 for _ in range(4)]
    qq = [[0] * 4 for _ in range(4)]
    totals = [0, 0, 0, 0]
    x = 1
    for k in range(p - 1):
        i = k & 3
        s16 = 16 * x // p
        j = s16 >> 2
        M[i][j] += 1
        N[i][(x - 1) & 3] += 1
        e = s16 >> 1
        if e & 1:
            th[i][e >> 1] += 1
        else:
            bh[i][e >> 1] += 1
        if i == 0:
            qq[j][s16 & 3] += 1
        totals[i] += x
        x = x * g % p
    return M, N, bh, th, qq, totals


def char_powers(p: int, m: int) -> np.ndarray:
    """out[x] = x**m mod p for x in [0, p), one builtin pow per element."""
    out = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        out[x] = pow(x, m, p)
    return out


def class_agreement(p: int, g: int, cls: np.ndarray) -> int:
    """Count walk positions where cls[g**k mod p] != k mod 4."""
    bad = 0
    x = 1
    for k in range(p - 1):
        if cls[x] != k & 3:
            bad += 1
        x = x * g % p
    return bad
