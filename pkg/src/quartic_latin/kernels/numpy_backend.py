"""Vectorized numpy kernels, used when numba is unavailable or switched off.

All arrays are int64; products of two residues stay below 2**63 because the
dispatcher rejects p >= isqrt(2**63).
"""

from __future__ import annotations

import math

import numpy as np


def _powers_upto(p: int, g: int, count: int) -> np.ndarray:
    """[g**0, g**1, ..., g**(count-1)] mod p via a baby-step/giant-step table."""
    c = math.isqrt(max(count - 1, 0)) + 1
    small = np.empty(c, np.int64)
    v = 1
    for a in range(c):
        small[a] = v
        v = v * g % p
    giant = np.empty(c, np.int64)
    w = 1
    for b in range(c):
        giant[b] = w
        w = w * v % p
    table = giant[:, None] * small[None, :] % p
    return table.reshape(-1)[:count]


def _class_pattern(n: int) -> np.ndarray:
    return np.tile(np.arange(4, dtype=np.int64), (n + 3) // 4)[:n]


def walk_tallies(p, g):
    n = p - 1
    xs = _powers_upto(p, g, n)
    cls = _class_pattern(n)
    s16 = 16 * xs // p
    j4 = s16 >> 2
    M = np.bincount(cls * 4 + j4, minlength=16).reshape(4, 4)
    N = np.bincount(cls * 4 + ((xs - 1) & 3), minlength=16).reshape(4, 4)
    e = s16 >> 1
    half_flat = cls * 4 + (e >> 1)
    top = (e & 1).astype(bool)
    bh = np.bincount(half_flat[~top], minlength=16).reshape(4, 4)
    th = np.bincount(half_flat[top], minlength=16).reshape(4, 4)
    quartic = cls == 0
    qq = np.bincount(s16[quartic], minlength=16).reshape(4, 4)
    totals = np.array([xs[cls == i].sum() for i in range(4)], dtype=np.int64)
    return M, N, bh, th, qq, totals


def char_powers(p, m):
    # square-and-multiply ladder over the whole residue vector at once
    acc = np.ones(p, np.int64)
    b = np.arange(p, dtype=np.int64)
    e = m
    while e > 0:
        if e & 1:
            acc *= b
            acc %= p
        e >>= 1
        if e:
            b *= b
            b %= p
    acc[0] = 0
    return acc


def class_agreement(p, g, cls):
    n = p - 1
    xs = _powers_upto(p, g, n)
    expected = _class_pattern(n)
    return int(np.count_nonzero(cls[xs] != expected))
