import pytest

from quartic_latin.nt_core import Prime5Mod8, enumerate_generators, find_primitive_root, generator_info, primes_5mod8
from quartic_latin.residue_matrix import (
    ClassMatrix,
    build_matrices,
    build_matrix,
    build_mod4_matrix,
    interval_index,
    mod4_index,
    quartic_first_row,
    quartic_residues,
)

from conftest import fourth_power_residues, interval_counts

MATRIX_109 = [[12, 5, 7, 3], [7, 12, 3, 5], [3, 7, 5, 12], [5, 3, 12, 7]]

RESIDUES_109 = [
    1, 3, 5, 7, 9, 15, 16, 21, 22, 25, 26, 27,
    35, 38, 45, 48, 49,
    63, 66, 73, 75, 78, 80, 81,
    89, 97, 105,
]


def test_interval_index_examples():
    assert interval_index(27, 109) == 0
    assert interval_index(35, 109) == 1
    assert interval_index(1, 5) == 0
    # block boundaries of the p=109 residue list
    assert interval_index(49, 109) == 1
    assert interval_index(63, 109) == 2
    assert interval_index(81, 109) == 2
    assert interval_index(89, 109) == 3
    assert interval_index(105, 109) == 3
    with pytest.raises(ValueError):
        interval_index(0, 109)
    with pytest.raises(ValueError):
        interval_index(109, 109)


def test_interval_index_never_on_boundary():
    for p in (5, 13, 109):
        for x in range(1, p):
            assert 4 * x % p != 0
            j = interval_index(x, p)
            assert j * p < 4 * x < (j + 1) * p


def test_mod4_index_examples():
    assert mod4_index(16) == 4
    assert mod4_index(1) == 1
    assert mod4_index(22) == 2
    for x in range(1, 50):
        j = mod4_index(x)
        assert 1 <= j <= 4 and x % 4 == j % 4
    with pytest.raises(ValueError):
        mod4_index(0)


def test_build_matrix_known_values_109():
    p = Prime5Mod8.from_prime(109)
    g = generator_info(p, 6)
    M = build_matrix(p, g)
    assert M.to_lists() == MATRIX_109
    assert M.kind == "interval" and (M.p, M.g) == (109, 6)


def test_build_matrix_small_examples():
    p5 = Prime5Mod8.from_prime(5)
    assert build_matrix(p5, generator_info(p5, 2)).to_lists() == [
        [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0],
    ]
    p13 = Prime5Mod8.from_prime(13)
    assert build_matrix(p13, generator_info(p13, 2)).first_row() == (2, 0, 1, 0)


def test_build_mod4_matrix_examples():
    p109 = Prime5Mod8.from_prime(109)
    assert build_mod4_matrix(p109, generator_info(p109, 6)).first_row() == (12, 5, 7, 3)
    p5 = Prime5Mod8.from_prime(5)
    assert build_mod4_matrix(p5, generator_info(p5, 2)).first_row() == (1, 0, 0, 0)
    p13 = Prime5Mod8.from_prime(13)
    assert build_mod4_matrix(p13, generator_info(p13, 2)).first_row() == (2, 0, 1, 0)


def test_build_matrices_single_walk_consistency():
    p = Prime5Mod8.from_prime(157)
    g = find_primitive_root(p)
    M, N = build_matrices(p, g)
    assert M.to_lists() == build_matrix(p, g).to_lists()
    assert N.to_lists() == build_mod4_matrix(p, g).to_lists()


def test_row_and_column_sums():
    for q in primes_5mod8(1, 700):
        g = find_primitive_root(q)
        M, N = build_matrices(q, g)
        assert M.row_sums() == [q.m] * 4
        assert M.col_sums() == [q.m] * 4
        assert N.row_sums() == [q.m] * 4
        assert M.entries[0][0] >= 1  # 1 is a quartic residue in the first interval


def test_quartic_first_row_examples():
    assert quartic_first_row(Prime5Mod8.from_prime(109)) == [12, 5, 7, 3]
    assert quartic_first_row(Prime5Mod8.from_prime(5)) == [1, 0, 0, 0]
    assert quartic_first_row(Prime5Mod8.from_prime(13)) == [2, 0, 1, 0]


def test_quartic_residues_vs_fourth_powers():
    for q in primes_5mod8(1, 600):
        got = [int(v) for v in quartic_residues(q)]
        assert got == fourth_power_residues(q.p)
        assert quartic_first_row(q) == interval_counts(q.p, got)


def test_residue_list_109_frozen():
    got = [int(v) for v in quartic_residues(Prime5Mod8.from_prime(109))]
    assert got == RESIDUES_109


def test_first_row_same_for_every_generator():
    for pv in (13, 29, 109):
        q = Prime5Mod8.from_prime(pv)
        free = quartic_first_row(q)
        for gi in enumerate_generators(q):
            assert list(build_matrix(q, gi).first_row()) == free


def test_parity_swap_of_rows():
    for pv in (13, 29, 37, 109):
        q = Prime5Mod8.from_prime(pv)
        gens = enumerate_generators(q)
        by_parity = {1: [], 3: []}
        for gi in gens:
            by_parity[gi.two_parity].append(build_matrix(q, gi).to_lists())
        for group in by_parity.values():
            assert all(mat == group[0] for mat in group)
        m1, m3 = by_parity[1][0], by_parity[3][0]
        assert m3 == [m1[0], m1[3], m1[2], m1[1]]


def test_class_matrix_kind_validation():
    with pytest.raises(ValueError):
        ClassMatrix.from_rows([[0] * 4] * 4, "diagonal", 13, 2)
