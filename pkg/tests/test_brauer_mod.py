from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionchar import analysis as A
from fusionchar.brauer_mod import (
    check_embedding_independence,
    check_mod_rank,
    mod_p_statement,
    reduce_matrix,
    reduce_table,
    reduce_value,
    run_mod_checks,
)
from fusionchar.errors import DomainError
from fusionchar.exact import Cyclotomic, fq_embed_root
from fusionchar.perm_group import parse_group
from fusionchar.pipeline import build_system


def test_s3_mod_5(s3c3):
    red = reduce_table(s3c3.bundle, 5)
    assert (red.k, red.e, red.rank) == (2, 3, 2)
    assert red.det_image.coeffs == (2, 0)  # det X = -3 = 2 mod 5


def test_s3_mod_2(s3c3):
    red = reduce_table(s3c3.bundle, 2)
    assert red.rank == 2
    assert red.det_image == red.det_image.field.one()  # -3 = 1 mod 2


def test_trivial_any_ell():
    T = parse_group("", 1)
    b = build_system(T, T, 3).bundle
    for ell in (2, 5, 7, 11):
        assert reduce_table(b, ell).rank == 1


def test_ell_equal_p_rejected(s3c3):
    with pytest.raises(DomainError, match="mod_p_statement"):
        reduce_table(s3c3.bundle, 3)
    with pytest.raises(DomainError):
        reduce_table(s3c3.bundle, 4)


def test_negative_control(s3c3):
    X = s3c3.bundle.X.copy()
    X[1] = X[0]
    red = reduce_matrix(X, 5)
    assert red.rank == 1 and red.det_image.is_zero()
    assert check_mod_rank(red, s3c3.fusion).status == A.FAIL


def test_cross_check_with_determinant(s4d8):
    b = s4d8.bundle
    for ell in (3, 5, 7):
        r = check_mod_rank(reduce_table(b, ell), b.fusion, b.det_abs_sq)
        assert r.status == A.PASS and r.witnesses["consistent_with_det"]


def test_embedding_independence(s3c3, s4d8):
    r = check_embedding_independence(s3c3.bundle, 5)
    assert r.status == A.PASS
    assert r.witnesses["zeta_images"][0] != r.witnesses["zeta_images"][1]
    # D8 table has conductor 4: two elements of order 4 in GF(9)
    assert check_embedding_independence(s4d8.bundle, 3).status == A.PASS


def test_embedding_independence_skipped_for_rational_conductor():
    C2 = parse_group("(1 2)")
    b = build_system(C2, C2, 2).bundle
    assert check_embedding_independence(b, 3).status == A.SKIPPED


@pytest.mark.parametrize("name", ["s3-c3-p3", "d8-inner", "s4-d8-p2"])
def test_mod_p_statement(catalog, name):
    F = catalog.build(name).fusion
    r = mod_p_statement(F)
    assert r.status == A.PASS and r.witnesses["p_regular_classes"] == [0]


def test_run_mod_checks_sections(s3c3):
    checks, sections = run_mod_checks(s3c3.bundle, [2, 3, 5, 7])
    assert [s["ell"] for s in sections] == [2, 5, 7]
    assert all(s["status"] == "pass" and s["rank"] == s["expected"] for s in sections)
    assert checks[0].name == "mod_p_statement"


e8 = st.lists(st.integers(-20, 20), min_size=4, max_size=4).map(lambda c: Cyclotomic(8, c))


@settings(max_examples=100, deadline=None)
@given(e8, e8, st.sampled_from([3, 5, 7, 17]))
def test_reduction_is_a_ring_map(a, b, ell):
    _, zeta = fq_embed_root(ell, 8)
    r = lambda x: reduce_value(x, 8, zeta)  # noqa: E731
    assert r(a + b) == r(a) + r(b)
    assert r(a * b) == r(a) * r(b)
    assert r(Cyclotomic.root_of_unity(8)) == zeta
