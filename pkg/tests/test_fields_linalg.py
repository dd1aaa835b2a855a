from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from modtypes import linalg as la
from modtypes.fields import GF, QQ, parse_field


def test_parse_field():
    assert parse_field("Q") is QQ
    assert parse_field("F7") == GF(7)
    assert parse_field("gf11") == GF(11)
    with pytest.raises(ValueError):
        parse_field("F8")
    with pytest.raises(ValueError):
        parse_field("R")


def test_prime_field_arithmetic():
    F = GF(7)
    a, b = F(3), F(5)
    assert a + b == 1
    assert a * b == 1
    assert a / b == F(3) * F(3)
    assert a**-1 == b
    assert F(Fraction(1, 3)) == b
    assert 2 - a == F(6)
    assert not F(14)
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()
    with pytest.raises(ValueError):
        F(1) + GF(5)(1)


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, x, y, z):
    F = GF(p)
    a, b, c = F(x), F(y), F(z)
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if a:
        assert a * a.inverse() == 1


def test_rational_field_rejects_prime_field_elements():
    with pytest.raises(TypeError):
        QQ(GF(5)(2))


matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=1, max_size=5)
)


@given(matrices, st.sampled_from([QQ, GF(5), GF(7)]))
def test_rank_nullity(rows, F):
    M = [[F(x) for x in row] for row in rows]
    n = len(M[0])
    ns = la.nullspace(M, F)
    assert la.rank(M) + len(ns) == n
    for x in ns:
        assert all(sum((a * b for a, b in zip(row, x)), F.zero) == 0 for row in M)


@given(matrices, st.sampled_from([QQ, GF(7)]))
def test_solve_left_and_row_space(rows, F):
    M = [[F(x) for x in row] for row in rows]
    coeffs = [F(i + 1) for i in range(len(M))]
    b = la.vecmat(coeffs, M)
    x = la.solve_left(M, b, F)
    assert x is not None and la.vecmat(x, M) == b
    assert la.in_row_space(b, M)
    assert la.same_row_space(M, M[::-1])


def test_solve_left_inconsistent():
    F = QQ
    M = [[F(1), F(0)], [F(2), F(0)]]
    assert la.solve_left(M, [F(0), F(1)], F) is None


@given(matrices)
def test_echelon_matches_rref(rows):
    F = QQ
    M = [[F(x) for x in row] for row in rows]
    ech = la.Echelon()
    for row in M:
        ech.add(row)
    assert la.mat_eq(ech.basis(), la.row_space_basis(M))
