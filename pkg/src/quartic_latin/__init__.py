"""Verification of the quartic-residue class matrices for primes p = 5 (mod 8)."""

from .nt_core import (
    Factorization,
    GeneratorInfo,
    Prime5Mod8,
    QuarticClassifier,
    classify,
    enumerate_generators,
    factorize,
    find_primitive_root,
    generator_info,
    inverse_generator,
    is_prime,
    make_classifier,
    mod_pow,
    primes_5mod8,
)
from .residue_matrix import (
    ClassMatrix,
    build_matrices,
    build_matrix,
    build_mod4_matrix,
    interval_index,
    mod4_index,
    quartic_first_row,
    quartic_residues,
)
from .scan import ScanSummary, scan_range
from .theorems import (
    FORM1,
    FORM2,
    VIOLATION,
    ClassSums,
    FalsificationError,
    OtherCongruenceSums,
    ProofLedger,
    VerificationReport,
    check_bijection_map,
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

__version__ = "0.1.0"
