from __future__ import annotations

import numpy as np
import pytest

from fusionchar.char_table import character_table, regular_character, trivial_character
from fusionchar.errors import CapacityError, DomainError
from fusionchar.exact import random_unimodular
from fusionchar.fusion import build_fusion, inner_fusion
from fusionchar.perm_group import sylow_subgroup
from fusionchar.stable_ring import (
    coordinates,
    evaluate,
    indecomposables,
    is_stable,
    restriction_sublattice_index,
    stability_constraints,
    stable_basis,
)

from conftest import group, sub


@pytest.fixture(scope="module")
def s3():
    S3 = group("(1 2), (1 2 3)")
    F = build_fusion(S3, sylow_subgroup(S3, 3), 3)
    return F, stable_basis(F, character_table(F.S))


def test_transitive_basis(s3):
    F, B = s3
    assert B.rows.tolist() == [[1, 0, 0], [0, 1, 1]]
    assert B.class_values.tolist() == [[1, 1], [2, -1]]
    assert B.canonical


def test_inner_basis_is_irr():
    D8 = group("(1 2 3 4), (1 3)")
    F = inner_fusion(D8, 2)
    B = stable_basis(F, character_table(D8))
    assert B.rows.tolist() == np.eye(5, dtype=int).tolist()
    assert stability_constraints(F, B.irr_s).shape[0] == 0


def test_coordinates(s3):
    F, B = s3
    assert coordinates(regular_character(F.S), B) == [1, 1]
    assert coordinates(trivial_character(F.S), B) == [1, 0]
    assert evaluate([1, 1], B) == regular_character(F.S)


def test_coordinates_rejects_unstable(s3):
    F, B = s3
    chi = B.irr_s.irr[1]  # a nontrivial linear character of C3 is not stable
    assert not is_stable(chi, F)
    with pytest.raises(DomainError):
        coordinates(chi, B)


def test_basis_change(s3):
    F, B = s3
    B2 = B.with_basis_change([[1, 1], [0, 1]])
    assert not B2.canonical
    assert B2.rows.tolist() == [[1, 1, 1], [0, 1, 1]]
    with pytest.raises(DomainError):
        B.with_basis_change([[2, 0], [0, 1]])


def test_restriction_index(s3):
    F, B = s3
    assert restriction_sublattice_index(F.G, F.S, B, character_table(F.G)) == 1


def test_transitive_atoms(s3):
    F, B = s3
    ind = indecomposables(F, B, degree_bound=6)
    assert set(ind.atoms) == {(1, 0, 0), (0, 1, 1)}  # 1_S and rho_S - 1_S
    assert ind.complete and ind.free_generation is True


def test_small_bound_is_incomplete(s3):
    F, B = s3
    ind = indecomposables(F, B, degree_bound=1)
    assert ind.atoms == ((1, 0, 0),)
    assert not ind.complete and ind.free_generation is None


def test_capacity_partial(s3):
    F, B = s3
    with pytest.raises(CapacityError) as exc:
        indecomposables(F, B, degree_bound=50, cap=5)
    assert exc.value.partial is not None and not exc.value.partial.complete


def test_noncanonical_enumeration_matches(s3):
    F, B = s3
    B2 = B.with_basis_change(random_unimodular(2, np.random.default_rng(3)))
    assert set(indecomposables(F, B2, 6).atoms) == set(indecomposables(F, B, 6).atoms)


def test_a4_v4_atoms():
    A4 = group("(1 2 3), (1 2)(3 4)")
    F = build_fusion(A4, sub(A4, "(1 2)(3 4), (1 3)(2 4)"), 2)
    B = stable_basis(F, character_table(F.S))
    ind = indecomposables(F, B)
    degs = character_table(F.S).degrees
    assert sorted(sum(a * d for a, d in zip(v, degs)) for v in ind.atoms) == [1, 3]
    assert ind.free_generation is True


def test_stable_basis_needs_matching_table(s3):
    F, _ = s3
    with pytest.raises(DomainError):
        stable_basis(F, character_table(F.G))
