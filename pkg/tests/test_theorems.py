import pytest

from quartic_latin.nt_core import (
    GeneratorInfo,
    Prime5Mod8,
    enumerate_generators,
    find_primitive_root,
    generator_info,
    inverse_generator,
    primes_5mod8,
)
from quartic_latin.residue_matrix import ClassMatrix, build_matrices, build_matrix, quartic_first_row
from quartic_latin.theorems import (
    FORM1,
    FORM2,
    VIOLATION,
    FalsificationError,
    check_bijection_map,
    check_generator_independence,
    check_latin,
    check_negation_symmetry,
    check_other_congruence_sums,
    check_proposition,
    check_remark_residues,
    check_structure,
    class_sums,
    other_congruence_sums,
    proof_ledger,
    quartic_sum_bruteforce,
    quartic_sum_formula,
    verify_prime,
)

from conftest import fourth_power_residues, naive_is_prime, square_residues

MATRIX_109 = [[12, 5, 7, 3], [7, 12, 3, 5], [3, 7, 5, 12], [5, 3, 12, 7]]

CHECK_NAMES = {
    "structure", "negation_symmetry", "row_col_sums", "latin_iff_distinct_first_row",
    "proposition", "bijection", "remark_residues", "first_row_generator_free",
    "proof_ledger", "class_sums", "weighted_sum_divisible", "sum_match",
    "classify_agreement",
}


def _p(v: int) -> Prime5Mod8:
    return Prime5Mod8.from_prime(v)


def _m109() -> ClassMatrix:
    return ClassMatrix.from_rows(MATRIX_109, "interval", 109, 6)


def test_check_structure_examples():
    assert check_structure(_m109(), 1) == FORM1
    p5 = _p(5)
    m2 = build_matrix(p5, generator_info(p5, 2))
    assert check_structure(m2, 1) == FORM1
    m3 = build_matrix(p5, generator_info(p5, 3))
    assert check_structure(m3, 3) == FORM2


def test_check_structure_violations():
    assert check_structure(_m109(), 3) == VIOLATION  # wrong parity
    rows = [list(r) for r in MATRIX_109]
    rows[2][0] += 1
    rows[2][1] -= 1
    bad = ClassMatrix.from_rows(rows, "interval", 109, 6)
    assert check_structure(bad, 1) == VIOLATION
    with pytest.raises(ValueError):
        check_structure(_m109(), 2)


def test_check_latin_examples():
    assert check_latin(_m109())
    p5, p13 = _p(5), _p(13)
    assert not check_latin(build_matrix(p5, generator_info(p5, 2)))
    assert not check_latin(build_matrix(p13, generator_info(p13, 2)))


def test_check_negation_symmetry_examples():
    assert check_negation_symmetry(_m109())
    p5 = _p(5)
    assert check_negation_symmetry(build_matrix(p5, generator_info(p5, 2)))
    rows = [list(r) for r in MATRIX_109]
    rows[0][0] += 1  # now M[0][0] != M[2][3]
    assert not check_negation_symmetry(ClassMatrix.from_rows(rows, "interval", 109, 6))


def test_check_proposition_examples():
    for pv in (5, 13, 109):
        q = _p(pv)
        M, N = build_matrices(q, find_primitive_root(q))
        assert check_proposition(M, N)
    with pytest.raises(ValueError):
        check_proposition(_m109(), _m109())  # both interval kind


def test_bijection_point_values():
    # frozen spot checks of x -> -4x mod p
    assert (-4 * 27) % 109 == 1 and 1 % 4 == 1
    assert (-4 * 9) % 13 == 3 and 3 % 4 == 3
    assert 3 in fourth_power_residues(13)
    assert (-4 * 1) % 5 == 1


def test_check_bijection_map():
    for q in primes_5mod8(1, 800):
        assert check_bijection_map(q), q.p


def test_check_remark_residues():
    for pv in (5, 13, 109):
        assert check_remark_residues(_p(pv))
    for q in primes_5mod8(1, 800):
        res = set(fourth_power_residues(q.p))
        assert {1, q.p - 4, q.m} <= res


def test_proof_ledger_examples():
    p109 = _p(109)
    ledger, ok = proof_ledger(p109, generator_info(p109, 6))
    assert ok and all(ledger.identities.values())
    assert ledger.matrix == MATRIX_109
    for i in range(4):
        for j in range(4):
            assert ledger.bottom_half[i][j] + ledger.top_half[i][j] == MATRIX_109[i][j]


def test_proof_ledger_p5_tallies():
    p5 = _p(5)
    ledger, ok = proof_ledger(p5, generator_info(p5, 2))
    assert ok
    t = [[0] * 4 for _ in range(4)]
    t[0][0] = 1  # x=1, class 0, top of first eighth
    t[1][1] = 1  # x=2, class 1
    assert ledger.top_half == t
    b = [[0] * 4 for _ in range(4)]
    b[2][3] = 1  # x=4, class 2
    b[3][2] = 1  # x=3, class 3
    assert ledger.bottom_half == b
    q = [[0] * 4 for _ in range(4)]
    q[0][3] = 1  # the residue 1 sits in the fourth sixteenth of I_1
    assert ledger.quarters == q


def test_proof_ledger_identity_names_stable():
    p13 = _p(13)
    ledger, _ = proof_ledger(p13, generator_info(p13, 2))
    assert set(ledger.identities) == {
        "halves_partition", "quarters_partition",
        "doubling_row2", "doubling_row3", "doubling_row4",
        "bottom_quarter_doubling", "top_quarter_doubling",
        "half_sums_balance", "column_sum_balance",
        "quarter_cross_equalities", "second_row_identity",
    }


def test_proof_ledger_rejects_parity3():
    p5 = _p(5)
    with pytest.raises(ValueError):
        proof_ledger(p5, generator_info(p5, 3))


def test_proof_ledger_property_range():
    for q in primes_5mod8(1, 800):
        g = find_primitive_root(q)
        if g.two_parity != 1:
            g = inverse_generator(q, g)
        _, ok = proof_ledger(q, g)
        assert ok, q.p


def test_class_sums_examples():
    p109 = _p(109)
    sums, ok = class_sums(p109, generator_info(p109, 6))
    assert ok and sums.b[0] == 1199
    assert sum(sums.b) == 109 * 108 // 2
    p5 = _p(5)
    sums5, ok5 = class_sums(p5, generator_info(p5, 2))
    assert ok5 and sums5.b == [1, 2, 4, 3]
    with pytest.raises(ValueError):
        class_sums(p5, generator_info(p5, 3))


def test_quartic_sum_bruteforce_examples():
    assert quartic_sum_bruteforce(_p(109)) == 1199
    assert quartic_sum_bruteforce(_p(5)) == 1
    assert quartic_sum_bruteforce(_p(13)) == 13
    for q in primes_5mod8(1, 600):
        assert quartic_sum_bruteforce(q) == sum(fourth_power_residues(q.p))


def test_quartic_sum_formula_examples():
    assert quartic_sum_formula(_p(109), [12, 5, 7, 3]) == 1199
    assert quartic_sum_formula(_p(5), [1, 0, 0, 0]) == 1
    assert quartic_sum_formula(_p(13), [2, 0, 1, 0]) == 13


def test_quartic_sum_formula_falsification():
    with pytest.raises(FalsificationError):
        quartic_sum_formula(_p(13), [1, 0, 1, 0])  # weighted sum 4, 52 not divisible by 5
    assert issubclass(FalsificationError, RuntimeError)


def test_other_congruence_sums_examples():
    o7 = other_congruence_sums(7)
    assert o7.ok and o7.quartic_sum == o7.reference_sum == 7
    assert o7.residue_class == "3 mod 4"

    o17 = other_congruence_sums(17)
    assert o17.residue_class == "1 mod 8"
    assert o17.quartic_sum == 34
    assert o17.reference_sum == 68
    assert not o17.sums_match
    assert o17.ok  # residue set is closed under x -> 17 - x

    o3 = other_congruence_sums(3)
    assert o3.ok and o3.quartic_sum == 1


def test_other_congruence_sums_vs_oracles():
    for p in range(3, 600):
        if not naive_is_prime(p) or p % 8 == 5 or p == 2:
            continue
        o = other_congruence_sums(p)
        quarts = fourth_power_residues(p)
        assert o.quartic_sum == sum(quarts)
        assert check_other_congruence_sums(p) == o.ok
        if p % 4 == 3:
            assert quarts == square_residues(p)
            assert o.ok
        else:
            assert all((p - x) in set(quarts) for x in quarts)
            assert o.ok


def test_other_congruence_sums_usage_errors():
    with pytest.raises(ValueError):
        other_congruence_sums(13)  # 5 mod 8 belongs to the main verifier
    with pytest.raises(ValueError):
        other_congruence_sums(2)
    with pytest.raises(ValueError):
        other_congruence_sums(9)  # composite


def test_verify_prime_examples():
    r109 = verify_prime(_p(109))
    assert r109.all_pass and not r109.falsified
    assert r109.form == FORM1 and r109.is_latin
    assert r109.sum_formula == r109.sum_bruteforce == 1199
    assert r109.matrix.to_lists() == MATRIX_109

    r5 = verify_prime(_p(5))
    assert r5.all_pass and not r5.is_latin

    r13 = verify_prime(_p(13))
    assert r13.all_pass and not r13.is_latin


def test_verify_prime_check_names():
    r = verify_prime(_p(29))
    assert set(r.checks) == CHECK_NAMES
    assert r.counterexamples == {}


def test_verify_prime_explicit_generator():
    p = _p(109)
    r = verify_prime(p, generator_info(p, 6))
    assert r.g == 6 and r.matrix.to_lists() == MATRIX_109


def test_verify_prime_parity3_generator():
    p = _p(109)
    g3 = next(gi for gi in enumerate_generators(p) if gi.two_parity == 3)
    r = verify_prime(p, g3)
    assert r.two_parity == 3 and r.form == FORM2
    assert r.all_pass  # ledger and class sums route through the inverse generator
    # opposite parity swaps rows 2 and 4 of both matrices
    base = verify_prime(p).matrix.to_lists()
    got = r.matrix.to_lists()
    assert got == [base[0], base[3], base[2], base[1]]


def test_verify_prime_json_schema():
    r = verify_prime(_p(13))
    d = r.to_json_dict()
    assert set(d) == {"p", "g", "parity", "M", "N", "form", "latin",
                      "sum_formula", "sum_bruteforce", "checks"}
    assert d["p"] == 13 and d["parity"] in (1, 3)
    assert isinstance(d["M"], list) and len(d["M"]) == 4
    assert all(isinstance(v, bool) for v in d["checks"].values())
    assert isinstance(d["latin"], bool)


def test_inverse_generator_swaps_rows_2_4_of_both_matrices():
    p = _p(109)
    g = generator_info(p, 6)
    M1, N1 = build_matrices(p, g)
    gi = inverse_generator(p, g)
    M2, N2 = build_matrices(p, gi)
    for a, b in ((M1, M2), (N1, N2)):
        ra, rb = a.to_lists(), b.to_lists()
        assert rb == [ra[0], ra[3], ra[2], ra[1]]


def test_check_generator_independence_small():
    for pv in (5, 13, 29, 37, 109):
        checks, notes = check_generator_independence(_p(pv))
        assert all(checks.values()), (pv, notes)
        assert set(checks) == {
            "deep_parity_split", "deep_parity_class_matrices",
            "deep_row24_swap", "deep_first_row_independent",
        }
