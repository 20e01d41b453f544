from __future__ import annotations

import pytest

from fusionchar.errors import DomainError
from fusionchar.fusion import build_fusion, inner_fusion, is_transitive, product_fusion
from fusionchar.perm_group import Permutation, sylow_subgroup

from conftest import group, sub


def reps(F):
    return [str(r) for r in F.reps]


def test_s3_c3():
    S3 = group("(1 2), (1 2 3)")
    F = build_fusion(S3, sylow_subgroup(S3, 3), 3)
    assert F.n_classes == 2 and is_transitive(F)
    assert reps(F) == ["()", "(1 2 3)"]
    assert F.g_centralizer_orders == (6, 3)
    assert F.s_centralizer_orders == (3, 3)
    assert [len(K) for K in F.classes] == [1, 2]


def test_s4_d8():
    S4 = group("(1 2), (1 2 3 4)")
    F = build_fusion(S4, sub(S4, "(1 2 3 4), (1 3)"), 2)
    assert reps(F) == ["()", "(2 4)", "(1 3)(2 4)", "(1 2 3 4)"]
    assert F.s_centralizer_orders == (8, 4, 8, 4)
    assert F.g_centralizer_orders == (24, 4, 8, 4)


def test_fully_centralised_choice():
    # in A4 on V4 the three involutions fuse; all have |C_S| = 4
    A4 = group("(1 2 3), (1 2)(3 4)")
    F = build_fusion(A4, sub(A4, "(1 2)(3 4), (1 3)(2 4)"), 2)
    assert F.n_classes == 2
    assert F.s_centralizer_orders == (4, 4)
    K = F.classes[1]
    assert F.reps[1] == min(K)


def test_inner_fusion_is_s_conjugacy():
    D8 = group("(1 2 3 4), (1 3)")
    F = inner_fusion(D8, 2)
    assert F.n_classes == len(D8.conjugacy_classes) == 5
    assert all(len(b) == 1 for b in F.s_class_blocks)


def test_class_of():
    S3 = group("(1 2), (1 2 3)")
    F = build_fusion(S3, sylow_subgroup(S3, 3), 3)
    assert F.class_of(Permutation.from_cycles([[1, 3, 2]], 3)) == 1
    with pytest.raises(DomainError):
        F.class_of(Permutation.from_cycles([[1, 2]], 3))


def test_rejections():
    S4 = group("(1 2), (1 2 3 4)")
    with pytest.raises(DomainError, match="not prime"):
        build_fusion(S4, sylow_subgroup(S4, 2), 4)
    with pytest.raises(DomainError, match="not a power"):
        build_fusion(S4, sylow_subgroup(S4, 2), 3)
    with pytest.raises(DomainError, match="saturation"):
        build_fusion(S4, sub(S4, "(1 2)"), 2)
    other = group("(1 2)(3 4)")
    with pytest.raises(DomainError, match="subgroup"):
        build_fusion(S4, other, 2)


def test_non_sylow_flag():
    S4 = group("(1 2), (1 2 3 4)")
    F = build_fusion(S4, sub(S4, "(1 2)"), 2, allow_non_sylow=True)
    assert not F.sylow and not F.saturation_guaranteed
    assert F.n_classes == 2


def test_product():
    S3 = group("(1 2), (1 2 3)")
    F = build_fusion(S3, sylow_subgroup(S3, 3), 3)
    P = product_fusion(F, F)
    assert P.n_classes == 4
    assert P.s_centralizer_orders == (9, 9, 9, 9)
    assert P.g_centralizer_orders == (36, 18, 18, 9)
    assert P.factors == (F, F)


def test_product_needs_one_prime():
    S3 = group("(1 2), (1 2 3)")
    F3 = build_fusion(S3, sylow_subgroup(S3, 3), 3)
    C2 = group("(1 2)")
    with pytest.raises(DomainError, match="single prime"):
        product_fusion(F3, inner_fusion(C2, 2))
