"""Structural checks for the quartic class matrices and the associated sums.

Every check here has two independent routes wherever the mathematics allows:
the walk over powers of a generator on one side, and the generator-free
quartic character x**m mod p on the other. A check that is proved for every
valid prime raises FalsificationError only through quartic_sum_formula; all
other failures are reported as booleans with counterexample payloads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .nt_core import (
    GeneratorInfo,
    Prime5Mod8,
    enumerate_generators,
    factorize,
    find_primitive_root,
    inverse_generator,
    is_prime,
    make_classifier,
)
from .residue_matrix import KIND_INTERVAL, KIND_MOD4, ClassMatrix, quartic_first_row

FORM1 = "Form1"
FORM2 = "Form2"
VIOLATION = "violation"

# Primes small enough to keep the explicit residue list on the report.
RESIDUE_LIST_LIMIT = 10**4


class FalsificationError(RuntimeError):
    """A property that is proved for every valid input failed on a concrete one."""


def _rows(M: ClassMatrix | list[list[int]]) -> list[list[int]]:
    if isinstance(M, ClassMatrix):
        return M.to_lists()
    return [list(r) for r in M]


def form_rows(first_row, form: str) -> list[list[int]]:
    """Expand a first row (a, b, c, d) into the full predicted matrix."""
    a, b, c, d = first_row
    if form == FORM1:
        return [[a, b, c, d], [c, a, d, b], [d, c, b, a], [b, d, a, c]]
    if form == FORM2:
        return [[a, b, c, d], [b, d, a, c], [d, c, b, a], [c, a, d, b]]
    raise ValueError(f"unknown form {form!r}")


def swap_rows_2_4(rows: list[list[int]]) -> list[list[int]]:
    r = _rows(rows)
    return [r[0], r[3], r[2], r[1]]


def check_structure(M: ClassMatrix, two_parity: int) -> str:
    """Which predicted row pattern the matrix matches for this parity of 2."""
    if two_parity not in (1, 3):
        raise ValueError(f"two_parity must be 1 or 3, got {two_parity}")
    rows = _rows(M)
    expected_form = FORM1 if two_parity == 1 else FORM2
    if rows == form_rows(rows[0], expected_form):
        return expected_form
    return VIOLATION


def check_latin(M: ClassMatrix) -> bool:
    """True when every row and every column holds four distinct values."""
    rows = _rows(M)
    for row in rows:
        if len(set(row)) != 4:
            return False
    for j in range(4):
        if len({row[j] for row in rows}) != 4:
            return False
    return True


def check_negation_symmetry(M: ClassMatrix) -> bool:
    """Counts reverse across intervals when the class index shifts by 2."""
    rows = _rows(M)
    return all(rows[i][j] == rows[i + 2][3 - j] for i in (0, 1) for j in range(4))


def check_proposition(M: ClassMatrix, N: ClassMatrix) -> bool:
    """The interval matrix and the mod-4 matrix carry identical counts."""
    if M.kind != KIND_INTERVAL or N.kind != KIND_MOD4:
        raise ValueError(f"expected kinds ({KIND_INTERVAL!r}, {KIND_MOD4!r}), got ({M.kind!r}, {N.kind!r})")
    if (M.p, M.g) != (N.p, N.g):
        raise ValueError(f"matrices come from different walks: ({M.p},{M.g}) vs ({N.p},{N.g})")
    return M.entries == N.entries


def _bijection_ok(p: int, xs: np.ndarray, quartic_mask: np.ndarray) -> tuple[bool, str]:
    ys = (-4 * xs) % p
    in_set = quartic_mask[ys]
    if not in_set.all():
        x = int(xs[np.nonzero(~in_set)[0][0]])
        return False, f"-4*{x} mod {p} is not a quartic residue"
    j = 4 * xs // p
    target = (j + 1) & 3
    hit = (ys & 3) == target
    if not hit.all():
        x = int(xs[np.nonzero(~hit)[0][0]])
        return False, f"-4*{x} mod {p} lands in the wrong congruence class"
    if np.unique(ys).size != ys.size:
        return False, f"x -> -4x mod {p} is not injective"
    src = np.bincount(j, minlength=4)
    mod = xs & 3
    tgt = np.array([np.count_nonzero(mod == ((jj + 1) & 3)) for jj in range(4)])
    if not np.array_equal(src, tgt):
        return False, f"interval blocks {src.tolist()} vs congruence blocks {tgt.tolist()}"
    return True, ""


def check_bijection_map(p: Prime5Mod8) -> bool:
    """x -> -4x mod p maps each interval block of quartic residues onto the
    matching congruence block, bijectively."""
    powers = kernels.char_powers(p.p, p.m)
    mask = powers == 1
    xs = np.nonzero(mask)[0].astype(np.int64)
    ok, _ = _bijection_ok(p.p, xs, mask)
    return ok


def check_remark_residues(p: Prime5Mod8) -> bool:
    """1, p-4 and (p-1)/4 are quartic residues for every valid p."""
    return all(pow(v, p.m, p.p) == 1 for v in (1, p.p - 4, p.m))


@dataclass
class ProofLedger:
    """Half- and sixteenth-interval tallies plus every identity they satisfy.

    bottom_half[i][j] and top_half[i][j] split the count M[i][j] at the
    midpoint of interval j; quarters[j][k] counts quartic residues in the
    k-th sixteenth of interval j. identities maps each named identity to
    whether it held.
    """

    p: int
    g: int
    bottom_half: list[list[int]]
    top_half: list[list[int]]
    quarters: list[list[int]]
    matrix: list[list[int]]
    identities: dict[str, bool] = field(default_factory=dict)


def _ledger_from_walk(p: int, g: int, walk: kernels.WalkTallies) -> tuple[ProofLedger, bool]:
    M, bh, th, qq = walk.interval, walk.bottom_half, walk.top_half, walk.quarters
    ids: dict[str, bool] = {}
    ids["halves_partition"] = all(
        bh[i][j] + th[i][j] == M[i][j] for i in range(4) for j in range(4)
    )
    ids["quarters_partition"] = all(
        bh[0][j] == qq[j][0] + qq[j][1] and th[0][j] == qq[j][2] + qq[j][3]
        for j in range(4)
    )
    for r in (1, 2, 3):
        ids[f"doubling_row{r + 1}"] = (
            M[r][0] == bh[r - 1][0] + bh[r - 1][2]
            and M[r][1] == th[r - 1][0] + th[r - 1][2]
            and M[r][2] == bh[r - 1][1] + bh[r - 1][3]
            and M[r][3] == th[r - 1][1] + th[r - 1][3]
        )
    ids["bottom_quarter_doubling"] = (
        bh[1][1] == qq[0][2] + qq[2][2] and bh[1][3] == qq[1][2] + qq[3][2]
    )
    ids["top_quarter_doubling"] = (
        th[1][1] == qq[0][3] + qq[2][3] and th[1][3] == qq[1][3] + qq[3][3]
    )
    ids["half_sums_balance"] = bh[0][0] + bh[0][1] == th[0][2] + th[0][3]
    ids["column_sum_balance"] = bh[0][1] + th[0][2] == bh[0][0] + th[0][3]
    ids["quarter_cross_equalities"] = bh[0][0] == th[0][2] and bh[0][1] == th[0][3]
    ids["second_row_identity"] = M[1][0] == M[0][2] and M[1][1] == M[0][0]
    ledger = ProofLedger(p, g, bh, th, qq, M, ids)
    return ledger, all(ids.values())


def proof_ledger(p: Prime5Mod8, g: GeneratorInfo) -> tuple[ProofLedger, bool]:
    """Half- and sixteenth-interval identities behind the row structure.

    The identities track how doubling x shifts classes by one, which pins
    2 to quartic class 1, so a parity-3 generator is rejected.
    """
    if g.two_parity != 1:
        raise ValueError(f"proof ledger requires a generator with two_parity 1, got {g.two_parity}")
    walk = kernels.walk_tallies(p.p, g.g)
    return _ledger_from_walk(p.p, g.g, walk)


@dataclass
class ClassSums:
    """Element sums b[i] over each quartic class B_i."""

    p: int
    g: int
    b: list[int]


def _sums_from_walk(p: int, g: int, walk: kernels.WalkTallies) -> tuple[ClassSums, bool]:
    b = walk.class_totals
    M = walk.interval
    ok = sum(b) == p * (p - 1) // 2
    for i in range(4):
        ok = ok and b[(i + 1) % 4] == 2 * b[i] - p * (M[i][2] + M[i][3])
    return ClassSums(p, g, b), ok


def class_sums(p: Prime5Mod8, g: GeneratorInfo) -> tuple[ClassSums, bool]:
    """Class element sums plus the doubling recurrence between them.

    Checks sum(b) = p(p-1)/2 and, cyclically,
    b[i+1] = 2*b[i] - p*(M[i][2] + M[i][3]). Requires two_parity 1.
    """
    if g.two_parity != 1:
        raise ValueError(f"class sums require a generator with two_parity 1, got {g.two_parity}")
    walk = kernels.walk_tallies(p.p, g.g)
    return _sums_from_walk(p.p, g.g, walk)


def quartic_sum_bruteforce(p: Prime5Mod8) -> int:
    """Sum of the quartic residues found by the character x**m = 1."""
    powers = kernels.char_powers(p.p, p.m)
    return int(np.nonzero(powers == 1)[0].astype(np.int64).sum())


def quartic_sum_formula(p: Prime5Mod8, first_row) -> int:
    """p*(a + 2b + 3c + 4d)/5 from the first row (a, b, c, d).

    The weighted sum is divisible by 5 for every valid p; a failure would
    falsify a proved identity and raises FalsificationError.
    """
    a, b, c, d = (int(v) for v in first_row)
    w = a + 2 * b + 3 * c + 4 * d
    total = p.p * w
    if total % 5 != 0:
        raise FalsificationError(
            f"p*(a+2b+3c+4d) = {p.p}*{w} is not divisible by 5 for p={p.p}"
        )
    return total // 5


@dataclass
class OtherCongruenceSums:
    """Quartic residue sums for primes outside the 5 (mod 8) family.

    For p = 3 (mod 4) the quartic residues coincide with the quadratic ones,
    so reference_sum is the quadratic residue sum. For p = 1 (mod 8) the
    asserted property (ok) is closure of the residue set under x -> p - x;
    reference_sum records p(p-1)/4 for comparison and sums_match says
    whether the brute-force sum agreed with it.
    """

    p: int
    residue_class: str
    quartic_sum: int
    reference_sum: int
    sums_match: bool
    ok: bool


def other_congruence_sums(p: int) -> OtherCongruenceSums:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 8 not in (1, 3, 7):
        raise ValueError(f"p = {p} is {p % 8} (mod 8); this check covers 1, 3, 7 (mod 8)")
    if p > kernels.KERNEL_MAX_P:
        raise ValueError(f"exhaustive residue sets require p <= {kernels.KERNEL_MAX_P}")
    ys = np.arange(1, p, dtype=np.int64)
    sq = ys * ys % p
    quads = np.unique(sq)
    quarts = np.unique(sq * sq % p)
    qsum = int(quarts.sum())
    if p % 4 == 3:
        ref = int(quads.sum())
        same = np.array_equal(quads, quarts) and qsum == ref
        return OtherCongruenceSums(p, "3 mod 4", qsum, ref, qsum == ref, same)
    stated = p * (p - 1) // 4
    paired = np.array_equal(quarts, (p - quarts)[::-1])
    return OtherCongruenceSums(p, "1 mod 8", qsum, stated, qsum == stated, paired)


def check_other_congruence_sums(p: int) -> bool:
    return other_congruence_sums(p).ok


@dataclass
class VerificationReport:
    """Outcome of every check for one prime, plus the matrices and sums."""

    p: int
    g: int
    two_parity: int
    matrix: ClassMatrix
    mod4_matrix: ClassMatrix
    form: str
    is_latin: bool
    sum_formula: int | None
    sum_bruteforce: int
    checks: dict[str, bool]
    counterexamples: dict[str, str] = field(default_factory=dict)
    quartic_residues: list[int] | None = None

    @property
    def all_pass(self) -> bool:
        return all(self.checks.values())

    @property
    def falsified(self) -> bool:
        """Every check verifies a proved statement, so any failure is a falsification."""
        return not self.all_pass

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "g": self.g,
            "parity": self.two_parity,
            "M": self.matrix.to_lists(),
            "N": self.mod4_matrix.to_lists(),
            "form": self.form,
            "latin": self.is_latin,
            "sum_formula": self.sum_formula,
            "sum_bruteforce": self.sum_bruteforce,
            "checks": dict(self.checks),
        }


def verify_prime(p: Prime5Mod8, g: GeneratorInfo | None = None) -> VerificationReport:
    """Run every check for one prime and return the full report.

    The walk over powers of g and the generator-free character route are
    computed separately and cross-checked; nothing is derived from one side
    alone when the other can confirm it.
    """
    if g is None:
        g = find_primitive_root(p)
    checks: dict[str, bool] = {}
    notes: dict[str, str] = {}

    def record(name: str, ok: bool, detail: str = "") -> None:
        checks[name] = bool(ok)
        if not ok:
            notes[name] = detail or "failed"

    walk = kernels.walk_tallies(p.p, g.g)
    M = ClassMatrix.from_rows(walk.interval, KIND_INTERVAL, p.p, g.g)
    N = ClassMatrix.from_rows(walk.mod4, KIND_MOD4, p.p, g.g)

    clf = make_classifier(p, g)
    powers = kernels.char_powers(p.p, p.m)
    cls = kernels.classes_from_powers(powers, clf.zeta, p.p)
    qr = np.nonzero(powers == 1)[0].astype(np.int64)
    free_row = [int(v) for v in np.bincount(4 * qr // p.p, minlength=4)]

    form = check_structure(M, g.two_parity)
    record("structure", form != VIOLATION,
           f"rows {M.to_lists()} do not match the parity-{g.two_parity} pattern")
    record("negation_symmetry", check_negation_symmetry(M), f"rows {M.to_lists()}")

    m = p.m
    sums_ok = (
        M.row_sums() == [m] * 4 and M.col_sums() == [m] * 4 and N.row_sums() == [m] * 4
    )
    record("row_col_sums", sums_ok,
           f"row sums {M.row_sums()}, col sums {M.col_sums()}, mod4 row sums {N.row_sums()}")

    is_latin = check_latin(M)
    distinct = len(set(M.first_row())) == 4
    record("latin_iff_distinct_first_row", is_latin == distinct,
           f"latin={is_latin} but first row {M.first_row()}")

    record("proposition", check_proposition(M, N),
           f"M {M.to_lists()} != N {N.to_lists()}")

    bij_ok, bij_note = _bijection_ok(p.p, qr, powers == 1)
    record("bijection", bij_ok, bij_note)
    record("remark_residues", check_remark_residues(p),
           f"one of 1, {p.p - 4}, {p.m} is not a quartic residue mod {p.p}")
    record("first_row_generator_free", free_row == list(M.first_row()),
           f"character row {free_row} != walk row {list(M.first_row())}")

    if g.two_parity == 1:
        ledger_g, ledger_walk = g, walk
    else:
        ledger_g = inverse_generator(p, g)
        ledger_walk = (
            kernels.walk_tallies(p.p, ledger_g.g) if ledger_g.two_parity == 1 else None
        )
    if ledger_walk is None:
        detail = f"inverse generator {ledger_g.g} also has two_parity 3"
        record("proof_ledger", False, detail)
        record("class_sums", False, detail)
    else:
        _, ledger_ok = _ledger_from_walk(p.p, ledger_g.g, ledger_walk)
        record("proof_ledger", ledger_ok, f"ledger identity failed for g={ledger_g.g}")
        _, csums_ok = _sums_from_walk(p.p, ledger_g.g, ledger_walk)
        record("class_sums", csums_ok, f"class sum recurrence failed for g={ledger_g.g}")

    sum_brute = int(qr.sum())
    a, b, c, d = free_row
    w = a + 2 * b + 3 * c + 4 * d
    total = p.p * w
    div_ok = total % 5 == 0 and (p.p == 5 or w % 5 == 0)
    record("weighted_sum_divisible", div_ok, f"a+2b+3c+4d = {w} for p={p.p}")
    sum_formula = total // 5 if total % 5 == 0 else None
    record("sum_match", sum_formula == sum_brute,
           f"formula {sum_formula} != brute force {sum_brute}")

    mism = kernels.class_agreement(p.p, g.g, cls)
    record("classify_agreement", mism == 0,
           f"{mism} positions disagree between the walk and the character")

    residues = [int(v) for v in qr] if p.p <= RESIDUE_LIST_LIMIT else None
    return VerificationReport(
        p=p.p, g=g.g, two_parity=g.two_parity, matrix=M, mod4_matrix=N,
        form=form, is_latin=is_latin, sum_formula=sum_formula,
        sum_bruteforce=sum_brute, checks=checks, counterexamples=notes,
        quartic_residues=residues,
    )


def _phi(fac_pairs) -> int:
    out = 1
    for q, e in fac_pairs:
        out *= (q - 1) * q ** (e - 1)
    return out


def check_generator_independence(p: Prime5Mod8) -> tuple[dict[str, bool], dict[str, str]]:
    """Walk every primitive root of p and compare the resulting matrices.

    Within one parity class all generators must give identical M and N;
    across parities the matrices must differ exactly by swapping rows 2
    and 4. The parity split must be exactly half and half.
    """
    gens = enumerate_generators(p)
    checks: dict[str, bool] = {}
    notes: dict[str, str] = {}
    expect = _phi(factorize(p.p - 1).pairs)
    par1 = [gi for gi in gens if gi.two_parity == 1]
    par3 = [gi for gi in gens if gi.two_parity == 3]
    split_ok = len(gens) == expect and len(par1) == len(par3) == expect // 2
    checks["deep_parity_split"] = split_ok
    if not split_ok:
        notes["deep_parity_split"] = (
            f"phi={expect}, found {len(gens)} generators, parity tally {len(par1)}/{len(par3)}"
        )
    if not par1 or not par3:
        detail = f"missing a whole parity class among the generators of {p.p}"
        for name in ("deep_parity_class_matrices", "deep_row24_swap", "deep_first_row_independent"):
            checks[name] = False
            notes[name] = detail
        return checks, notes

    walks = {gi.g: kernels.walk_tallies(p.p, gi.g) for gi in gens}
    free_row = quartic_first_row(p)

    same_ok = True
    for group in (par1, par3):
        base = walks[group[0].g].interval, walks[group[0].g].mod4
        for gi in group[1:]:
            if (walks[gi.g].interval, walks[gi.g].mod4) != base:
                same_ok = False
                notes["deep_parity_class_matrices"] = (
                    f"g={gi.g} disagrees with g={group[0].g} at parity {gi.two_parity}"
                )
                break
    checks["deep_parity_class_matrices"] = same_ok

    m1, n1 = walks[par1[0].g].interval, walks[par1[0].g].mod4
    m3, n3 = walks[par3[0].g].interval, walks[par3[0].g].mod4
    swap_ok = m3 == swap_rows_2_4(m1) and n3 == swap_rows_2_4(n1)
    checks["deep_row24_swap"] = swap_ok
    if not swap_ok:
        notes["deep_row24_swap"] = f"parity-3 matrices are not the row-2/4 swap of parity-1 for p={p.p}"

    rows_ok = all(walks[gi.g].interval[0] == free_row for gi in gens)
    checks["deep_first_row_independent"] = rows_ok
    if not rows_ok:
        notes["deep_first_row_independent"] = f"some generator's first row differs from {free_row}"
    return checks, notes
