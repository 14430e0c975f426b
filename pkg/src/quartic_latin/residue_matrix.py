"""The 4x4 class-count matrices M (quarter intervals) and N (residues mod 4).

Row i counts elements of the quartic class B_i = {g**k : k = i (mod 4)}.
For kind "interval" column j counts members of (j*p/4, (j+1)*p/4); for kind
"mod4" column j counts members congruent to j+1 mod 4 (column 3 is 0 mod 4).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .nt_core import GeneratorInfo, Prime5Mod8

KIND_INTERVAL = "interval"
KIND_MOD4 = "mod4"


@dataclass(frozen=True)
class ClassMatrix:
    entries: tuple[tuple[int, int, int, int], ...]
    kind: str
    p: int
    g: int

    def __post_init__(self) -> None:
        if self.kind not in (KIND_INTERVAL, KIND_MOD4):
            raise ValueError(f"kind must be {KIND_INTERVAL!r} or {KIND_MOD4!r}, got {self.kind!r}")

    @classmethod
    def from_rows(cls, rows, kind: str, p: int, g: int) -> "ClassMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows), kind, p, g)

    def first_row(self) -> tuple[int, int, int, int]:
        return self.entries[0]

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.entries]

    def col_sums(self) -> list[int]:
        return [sum(row[j] for row in self.entries) for j in range(4)]

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def interval_index(x: int, p: int) -> int:
    """Which quarter interval (jp/4, (j+1)p/4) holds x; exact, no floats.

    4x is never a multiple of p for 0 < x < p, so boundaries cannot occur.
    """
    if not 1 <= x < p:
        raise ValueError(f"x must lie in [1, p-1], got x={x}, p={p}")
    return 4 * x // p


def mod4_index(x: int) -> int:
    """The j in {1, 2, 3, 4} with x = j (mod 4), counting 0 as 4."""
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    return (x - 1) % 4 + 1


def build_matrices(p: Prime5Mod8, g: GeneratorInfo) -> tuple[ClassMatrix, ClassMatrix]:
    """Both matrices from a single walk over the powers of g."""
    t = kernels.walk_tallies(p.p, g.g)
    return (
        ClassMatrix.from_rows(t.interval, KIND_INTERVAL, p.p, g.g),
        ClassMatrix.from_rows(t.mod4, KIND_MOD4, p.p, g.g),
    )


def build_matrix(p: Prime5Mod8, g: GeneratorInfo) -> ClassMatrix:
    return build_matrices(p, g)[0]


def build_mod4_matrix(p: Prime5Mod8, g: GeneratorInfo) -> ClassMatrix:
    return build_matrices(p, g)[1]


def quartic_residues(p: Prime5Mod8) -> np.ndarray:
    """Ascending quartic residues mod p, found by the character x**m = 1.

    Generator-free, so independent of the walk that builds the matrices.
    """
    powers = kernels.char_powers(p.p, p.m)
    return np.nonzero(powers == 1)[0].astype(np.int64)


def quartic_first_row(p: Prime5Mod8) -> list[int]:
    """Interval counts of the quartic residues without choosing a generator."""
    xs = quartic_residues(p)
    return [int(v) for v in np.bincount(4 * xs // p.p, minlength=4)]
