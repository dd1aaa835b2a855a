import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from modtypes import linalg as la
from modtypes.bernstein import bernstein_X
from modtypes.fields import GF, QQ
from modtypes.hecke import HeckeAlgebra
from modtypes.heckemod import (
    MAX_SPIN_DIM,
    BlockChar,
    FinModule,
    LaurentChar,
    find_simple_submodules,
    induce,
    induce_from_laurent_char,
    is_reducible_rank2,
    reducibility_locus_rank2,
    spin,
    verify_Y1_bijection,
)
from modtypes.weyl import Composition, compositions
from oracles import rational_roots_of_quadratic_char


def test_induced_dimensions():
    assert induce_from_laurent_char(HeckeAlgebra(2, 3), (1, 5)).dim == 2
    mod = induce_from_laurent_char(HeckeAlgebra(1, 3), (7,))
    assert mod.dim == 1 and mod.x_matrices() == [[[7]]]
    assert induce_from_laurent_char(HeckeAlgebra(3, 3), (1, 1, 1)).dim == 6


def test_induced_module_is_a_module():
    A = HeckeAlgebra(3, 2)
    mod = induce_from_laurent_char(A, (1, 3, Fraction(1, 2)))
    assert all(c.passed for c in mod.relation_checks())
    # the action is multiplicative on products of algebra elements
    T1, T2 = A.S(1) * A.Pi(1) + 3, A.S(2) - A.Pi(-1)
    assert la.mat_eq(mod.matrix(T1 * T2), la.matmul(mod.matrix(T1), mod.matrix(T2)))
    xs = mod.x_matrices()
    for a in xs:
        for b in xs:
            assert la.mat_eq(la.matmul(a, b), la.matmul(b, a))


def test_laurent_char_rejects_zero_and_wrong_length():
    with pytest.raises(ValueError):
        LaurentChar((1, 0))
    with pytest.raises(ValueError):
        induce_from_laurent_char(HeckeAlgebra(2, 3), (1, 2, 3))
    with pytest.raises(ValueError):
        induce_from_laurent_char(HeckeAlgebra(2, 3, GF(5)), (1, 5))


def test_module_rejects_bad_action():
    A = HeckeAlgebra(2, 3)
    F = A.field
    I = la.eye(F, 1)
    with pytest.raises(ValueError):
        FinModule(A, 1, {"S1": [[F(2)]], "Pi": I, "Pi_inv": I})
    # S1 -> q, Pi -> 1 is the trivial-type character
    assert FinModule(A, 1, {"S1": [[F(3)]], "Pi": I, "Pi_inv": I}).dim == 1


def test_reducibility_examples():
    A = HeckeAlgebra(2, 3)
    assert is_reducible_rank2(A, 3)
    assert not is_reducible_rank2(A, 2)
    assert is_reducible_rank2(A, Fraction(1, 3))
    assert not is_reducible_rank2(A, 1)
    assert not is_reducible_rank2(A, -1)
    with pytest.raises(ValueError):
        is_reducible_rank2(A, 0)
    with pytest.raises(ValueError):
        is_reducible_rank2(HeckeAlgebra(3, 3), 3)


@pytest.mark.parametrize("ell", [2, 3, 5, 7, 11])
def test_reducibility_locus_exhaustive(ell):
    F = GF(ell)
    for q in F.units():
        locus = reducibility_locus_rank2(HeckeAlgebra(2, q, F))
        assert set(locus) == {q, q.inverse()}, (ell, q, locus)


def test_locus_needs_finite_field():
    with pytest.raises(ValueError):
        reducibility_locus_rank2(HeckeAlgebra(2, 3))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.integers(-12, 12).filter(bool), st.integers(1, 12))
def test_reducibility_over_rationals(q, num, den):
    z = Fraction(num, den)
    assert is_reducible_rank2(HeckeAlgebra(2, q), z) == (z in (q, Fraction(1, q)))


def _oracle_has_invariant_line(S1, P):
    # a 1-dim submodule is an eigenline of Pi (rational roots only) that S1 preserves
    for lam in rational_roots_of_quadratic_char(P):
        a, b = P[0][0] - lam, P[1][0]
        v = (b, -a) if (a or b) else (1, 0)
        if not any(v):
            v = (P[1][1] - lam, -P[0][1])
        w = (v[0] * S1[0][0] + v[1] * S1[1][0], v[0] * S1[0][1] + v[1] * S1[1][1])
        if v[0] * w[1] - v[1] * w[0] == 0:
            return True
    return False


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_reducibility_matches_eigenline_oracle(q):
    A = HeckeAlgebra(2, q)
    for num in range(-30, 31):
        for den in (1, 2, 3, 4, 5, 9, 25):
            if not num:
                continue
            z = Fraction(num, den)
            mod = induce_from_laurent_char(A, (1, z))
            expected = _oracle_has_invariant_line(mod.action["S1"], mod.action["Pi"])
            assert is_reducible_rank2(A, z) == expected, z


def test_simple_submodules_examples():
    A = HeckeAlgebra(2, 3)
    subs = find_simple_submodules(induce_from_laurent_char(A, (1, 3)))
    assert [len(S) for S in subs] == [1]
    subs = find_simple_submodules(induce_from_laurent_char(A, (1, 2)))
    assert [len(S) for S in subs] == [2]
    one = induce_from_laurent_char(HeckeAlgebra(1, 3), (5,))
    assert find_simple_submodules(one) == [la.eye(QQ, 1)]


def test_simple_submodules_over_finite_field():
    F = GF(7)
    A = HeckeAlgebra(2, 3, F)
    subs = find_simple_submodules(induce_from_laurent_char(A, (1, 5)))  # 5 = 3^-1 in F7
    assert [len(S) for S in subs] == [1]
    mod = induce_from_laurent_char(HeckeAlgebra(3, 2, F), (1, 2, 4))
    subs = find_simple_submodules(mod)
    for S in subs:
        for v in S:
            assert la.same_row_space(spin(mod, v), S)


def test_simple_submodule_guard():
    mod = induce_from_laurent_char(HeckeAlgebra(1, 3), (5,))
    mod.dim = MAX_SPIN_DIM + 1
    with pytest.raises(ValueError):
        find_simple_submodules(mod)


def test_spin_of_zero_vector_is_zero():
    mod = induce_from_laurent_char(HeckeAlgebra(2, 3), (1, 2))
    assert spin(mod, [QQ.zero, QQ.zero]) == []


@pytest.mark.parametrize("sign", ["q", "-1"])
def test_block_character_induction(sign):
    A = HeckeAlgebra(3, 3)
    q = A.param
    values = (1, q, 5) if sign == "q" else (q, 1, 5)
    mod = induce(A, BlockChar(Composition((2, 1)), values, sign))
    assert mod.dim == 3
    assert all(c.passed for c in mod.relation_checks())


@pytest.mark.parametrize("r", [2, 3, 4])
def test_block_induction_dimension_is_coset_count(r):
    F = GF(11)
    A = HeckeAlgebra(r, 2, F)
    from math import factorial

    for parts in compositions(r):
        alpha = Composition(parts)
        values = []
        for n in parts:
            values += [F(3) * A.param**k for k in range(n)]
        mod = induce(A, BlockChar(alpha, tuple(values)))
        block = 1
        for n in parts:
            block *= factorial(n)
        assert mod.dim == factorial(r) // block


def test_block_character_compatibility_rejected():
    A = HeckeAlgebra(2, 3)
    with pytest.raises(ValueError):
        induce(A, BlockChar(Composition((2,)), (1, 2)))
    with pytest.raises(ValueError):
        BlockChar(Composition((2,)), (1, 3), "+1")


def _joint_eigenspace_dim(mats, weights, F):
    B = la.eye(F, len(mats[0]))
    for M, lam in zip(mats, weights):
        A = [[a - lam * b for a, b in zip(ra, rb)] for ra, rb in zip(la.matmul(B, M), B)]
        xs = la.left_nullspace(A, F)
        if not xs:
            return 0
        B = la.row_space_basis([la.vecmat(x, B) for x in xs])
    return len(B)


def test_x_weights_of_generic_induced_module_are_permutations():
    A = HeckeAlgebra(3, 5)
    z = (2, 3, 7)
    mod = induce_from_laurent_char(A, z)
    xs = mod.x_matrices()
    # evaluation at 1 is the f_e-coordinate, which X_i scales by z_i
    for M, zi in zip(xs, z):
        assert [row[0] for row in M] == [QQ(zi)] + [QQ.zero] * 5
    for perm in itertools.permutations(z):
        assert _joint_eigenspace_dim(xs, perm, QQ) == 1


def test_y1_examples():
    rep = verify_Y1_bijection(Composition((2, 1)), 3, QQ)
    assert (rep.dim, rep.rank_y1, rep.rank_ydelta) == (6, 6, 6) and rep.passed
    rep = verify_Y1_bijection(Composition((2,)), 3, QQ)
    assert (rep.rank_y1, rep.rank_ydelta) == (2, 2) and rep.passed
    rep = verify_Y1_bijection(Composition((2, 2)), 5, QQ)
    assert rep.rank_y1 == 24 and rep.passed


@pytest.mark.parametrize("F", [QQ, GF(7)], ids=["Q", "F7"])
@pytest.mark.parametrize("q", [2, 3, 5])
def test_y1_all_compositions(F, q):
    for r in (1, 2, 3, 4):
        for parts in compositions(r):
            rep = verify_Y1_bijection(Composition(parts), q, F)
            assert rep.passed, (parts, q, F)
