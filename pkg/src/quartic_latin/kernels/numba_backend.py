"""numba-jitted kernels. int64 products require p < isqrt(2**63), enforced upstream."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def walk_tallies(p, g):
    M = np.zeros((4, 4), np.int64)
    N = np.zeros((4, 4), np.int64)
    bh = np.zeros((4, 4), np.int64)
    th = np.zeros((4, 4), np.int64)
    qq = np.zeros((4, 4), np.int64)
    totals = np.zeros(4, np.int64)
    x = np.int64(1)
    for k in range(p - 1):
        i = k & 3
        s16 = 16 * x // p
        j = s16 >> 2
        M[i, j] += 1
        N[i, (x - 1) & 3] += 1
        e = s16 >> 1
        if e & 1:
            th[i, e >> 1] += 1
        else:
            bh[i, e >> 1] += 1
        if i == 0:
            qq[j, s16 & 3] += 1
        totals[i] += x
        x = x * g % p
    return M, N, bh, th, qq, totals


@njit(cache=True)
def _mod_pow(base, exp, p):
    acc = np.int64(1)
    b = base % p
    e = exp
    while e > 0:
        if e & 1:
            acc = acc * b % p
        b = b * b % p
        e >>= 1
    return acc


@njit(cache=True)
def char_powers(p, m):
    # x -> x**m is fully multiplicative, so a linear sieve needs one
    # modular exponentiation per prime and one mulmod per composite.
    out = np.zeros(p, np.int64)
    if p > 1:
        out[1] = 1
    spf = np.zeros(p, np.int64)
    primes = np.empty(p // 4 + 16, np.int64)
    nprimes = 0
    for x in range(2, p):
        if spf[x] == 0:
            spf[x] = x
            primes[nprimes] = x
            nprimes += 1
            out[x] = _mod_pow(np.int64(x), np.int64(m), np.int64(p))
        for idx in range(nprimes):
            q = primes[idx]
            nx = q * x
            if nx >= p:
                break
            spf[nx] = q
            out[nx] = out[q] * out[x] % p
            if q == spf[x]:
                break
    return out


@njit(cache=True)
def class_agreement(p, g, cls):
    bad = 0
    x = np.int64(1)
    for k in range(p - 1):
        if cls[x] != k & 3:
            bad += 1
        x = x * g % p
    return bad
