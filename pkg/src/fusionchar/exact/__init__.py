"""Exact arithmetic: cyclotomic fields, finite fields and integer lattices."""

from .cyclotomic import (
    Cyclotomic,
    cyclo_conj_matrix,
    cyclo_det,
    cyclo_matrix,
    cyclo_root_of_unity,
    cyclo_to_rational,
    cyclotomic_polynomial,
)
from .finite_field import FiniteField, FqElement, fq_embed_root, fq_rank, irreducible_polynomial
from .intmat import (
    elementary_divisors,
    hnf,
    hnf_basis,
    int_det,
    int_matrix,
    lattice_index,
    left_kernel,
    random_unimodular,
    right_kernel,
    snf,
    solve_left,
)

__all__ = [
    "Cyclotomic", "cyclo_conj_matrix", "cyclo_det", "cyclo_matrix", "cyclo_root_of_unity",
    "cyclo_to_rational", "cyclotomic_polynomial", "FiniteField", "FqElement", "fq_embed_root",
    "fq_rank", "irreducible_polynomial", "elementary_divisors", "hnf", "hnf_basis", "int_det",
    "int_matrix", "lattice_index", "left_kernel", "random_unimodular", "right_kernel", "snf",
    "solve_left",
]
