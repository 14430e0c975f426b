"""Hot counting kernels with selectable backends.

Set QUARTIC_LATIN_BACKEND to auto (default), numba, numpy, or python.
"auto" prefers numba and falls back to numpy when numba cannot be imported.
The python backend is the exact big-int reference and is only practical for
small p. All walks are O(p), so p is capped at isqrt(2**63 - 1) where the
int64 backends would overflow.
"""

from __future__ import annotations

import math
import os
from typing import NamedTuple

import numpy as np

from . import numpy_backend, reference

try:
    from . import numba_backend

    HAVE_NUMBA = True
except ImportError:
    numba_backend = None
    HAVE_NUMBA = False

KERNEL_MAX_P = math.isqrt(2**63 - 1)

_BACKENDS = ("auto", "numba", "numpy", "python")


class WalkTallies(NamedTuple):
    """All counts from one walk x = g**k over k = 0 .. p-2.

    Rows are quartic classes B_i; interval columns are the quarters
    (j*p/4, (j+1)*p/4); mod4 columns j hold counts of x = j+1 (mod 4).
    bottom_half/top_half split each quarter at its midpoint; quarters has
    row j = quarter interval, column k = k-th sixteenth within it, counting
    quartic residues only. class_totals[i] = sum of the elements of B_i.
    """

    interval: list[list[int]]
    mod4: list[list[int]]
    bottom_half: list[list[int]]
    top_half: list[list[int]]
    quarters: list[list[int]]
    class_totals: list[int]


def _resolve(name: str):
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("QUARTIC_LATIN_BACKEND=numba but numba is not importable")
        return numba_backend
    if name == "numpy":
        return numpy_backend
    if name == "python":
        return reference
    if name == "auto":
        return numba_backend if HAVE_NUMBA else numpy_backend
    raise ValueError(f"unknown backend {name!r}, expected one of {_BACKENDS}")


_active = _resolve(os.environ.get("QUARTIC_LATIN_BACKEND", "auto").strip().lower() or "auto")


def set_backend(name: str) -> None:
    """Switch the kernel backend at runtime (mainly for tests and benchmarks)."""
    global _active
    _active = _resolve(name)


def active_backend() -> str:
    if _active is numpy_backend:
        return "numpy"
    if _active is reference:
        return "python"
    return "numba"


def _check_p(p: int) -> None:
    if not 2 <= p <= KERNEL_MAX_P:
        raise ValueError(f"exhaustive kernels require 2 <= p <= {KERNEL_MAX_P}, got {p}")


def _as_lists(mat) -> list[list[int]]:
    return [[int(v) for v in row] for row in mat]


def walk_tallies(p: int, g: int) -> WalkTallies:
    """One pass over the powers of g tallying every count table at once."""
    _check_p(p)
    M, N, bh, th, qq, totals = _active.walk_tallies(p, g)
    return WalkTallies(
        _as_lists(M), _as_lists(N), _as_lists(bh), _as_lists(th), _as_lists(qq),
        [int(v) for v in totals],
    )


def char_powers(p: int, m: int) -> np.ndarray:
    """int64 array of x**m mod p for x in [0, p)."""
    _check_p(p)
    return _active.char_powers(p, m)


def class_agreement(p: int, g: int, cls: np.ndarray) -> int:
    """Number of k in [0, p-1) where cls[g**k mod p] != k mod 4."""
    _check_p(p)
    return int(_active.class_agreement(p, g, np.ascontiguousarray(cls)))


def classes_from_powers(powers: np.ndarray, zeta: int, p: int) -> np.ndarray:
    """Map x**m values to class indices 0..3; x = 0 gets the sentinel 255."""
    cls = np.full(p, 255, np.uint8)
    cls[powers == 1] = 0
    cls[powers == zeta] = 1
    cls[powers == p - 1] = 2
    cls[powers == p - zeta] = 3
    cls[0] = 255
    if np.any(cls[1:] == 255):
        bad = int(np.nonzero(cls[1:] == 255)[0][0]) + 1
        raise RuntimeError(f"x**m = {int(powers[bad])} at x = {bad} is outside the class table mod {p}")
    return cls
