from __future__ import annotations

import pytest

from fusionchar.char_table import (
    ClassFunction,
    choose_prime,
    class_mult_coefficients,
    dixon_schneider,
    inner_product,
    irr_decompose,
    regular_character,
    restrict,
    trivial_character,
)
from fusionchar.errors import DomainError
from fusionchar.exact import Cyclotomic
from fusionchar.perm_group import direct_product, parse_group

from conftest import group

GROUPS = {
    "trivial": ("", 1),
    "C2": ("(1 2)", None),
    "C4": ("(1 2 3 4)", None),
    "S3": ("(1 2), (1 2 3)", None),
    "D8": ("(1 2 3 4), (1 3)", None),
    "Q8": ("(1 3 2 4)(5 8 6 7), (1 5 2 6)(3 7 4 8)", None),
    "A4": ("(1 2 3), (1 2)(3 4)", None),
    "S4": ("(1 2), (1 2 3 4)", None),
    "A5": ("(1 2 3 4 5), (1 2 3)", None),
    "C5": ("(1 2 3 4 5)", None),
    "C3xC3": ("(1 2 3), (4 5 6)", None),
}

DEGREES = {
    "trivial": [1], "C2": [1, 1], "C4": [1] * 4, "S3": [1, 1, 2], "D8": [1, 1, 1, 1, 2],
    "Q8": [1, 1, 1, 1, 2], "A4": [1, 1, 1, 3], "S4": [1, 1, 2, 3, 3], "A5": [1, 3, 3, 4, 5],
    "C5": [1] * 5, "C3xC3": [1] * 9,
}


def orthogonality_holds(table) -> bool:
    G = table.group
    irr = table.irr
    sizes = [c.size for c in G.conjugacy_classes]
    for a in irr:
        for b in irr:
            s = sum((x * y.conj() * n for x, y, n in zip(a.values, b.values, sizes)),
                    Cyclotomic.rational(0))
            if s != (G.order if a is b else 0):
                return False
    k = len(sizes)
    for i in range(k):
        for j in range(k):
            s = sum((chi.values[i] * chi.values[j].conj() for chi in irr), Cyclotomic.rational(0))
            if s != (G.conjugacy_classes[i].centralizer_order if i == j else 0):
                return False
    return sum(d * d for d in table.degrees) == G.order


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_tables(name):
    text, degree = GROUPS[name]
    G = parse_group(text, degree)
    T = dixon_schneider(G)
    assert sorted(T.degrees) == DEGREES[name]
    assert T.degrees == sorted(T.degrees)
    assert all(v == 1 for v in T.irr[0].values)
    assert orthogonality_holds(T)


def test_order_36_product():
    S3 = group("(1 2), (1 2 3)")
    P = direct_product(S3, S3)
    T = dixon_schneider(P)
    assert P.order == 36 and len(T) == 9
    assert orthogonality_holds(T)


def test_s3_values():
    T = dixon_schneider(group("(1 2), (1 2 3)"))
    # classes: (), (2 3)-type, 3-cycles
    assert [list(chi.values) for chi in T.irr] == [[1, 1, 1], [1, -1, 1], [2, 0, -1]]


def test_cyclic_values_are_roots_of_unity():
    T = dixon_schneider(group("(1 2 3 4)"))
    for chi in T.irr:
        for v in chi.values:
            assert v ** 4 == 1


def test_prime_choice():
    q = choose_prime(60, 30)
    assert q % 30 == 1 and q * q > 4 * 60
    assert choose_prime(6, 6) == 7


def test_class_multiplication():
    S3 = group("(1 2), (1 2 3)")
    # transposition * transposition lands on the identity 3 times
    assert class_mult_coefficients(S3, 1, 1, 0) == 3
    assert class_mult_coefficients(S3, 1, 1, 2) == 3


def test_restrict_and_decompose():
    S4 = group("(1 2), (1 2 3 4)")
    D8 = S4.subgroup(parse_group("(1 2 3 4), (1 3)", 4).generators)
    T4, T8 = dixon_schneider(S4), dixon_schneider(D8)
    for chi in T4.irr:
        r = restrict(chi, D8)
        coeffs, integral = irr_decompose(r, T8)
        assert integral and all(c >= 0 for c in coeffs)
        assert sum(c * d for c, d in zip(coeffs, T8.degrees)) == int(chi.degree.to_rational())
    with pytest.raises(DomainError):
        restrict(T8.irr[0], S4)


def test_regular_and_trivial():
    G = group("(1 2 3 4), (1 3)")
    T = dixon_schneider(G)
    rho = regular_character(G)
    coeffs, _ = irr_decompose(rho, T)
    assert coeffs == T.degrees
    assert inner_product(trivial_character(G), trivial_character(G)) == 1


def test_class_function_validation():
    G = group("(1 2)")
    with pytest.raises(DomainError):
        ClassFunction(G, (1, 2, 3))


def test_table_json():
    import json

    T = dixon_schneider(group("(1 2 3)"))
    d = json.loads(T.to_json())
    assert d["conductor"] == 3
    assert d["irreducibles"][0] == [1, 1, 1]
    z = d["irreducibles"][1][1]
    assert z["e"] == 3 and len(z["coeffs"]) == 2
