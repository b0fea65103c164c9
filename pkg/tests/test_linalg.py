from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from rtk import linalg as la
from rtk.errors import DimensionMismatch
from rtk.scalars import QuadExt

small = st.integers(-3, 3)


def int_matrix(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def square(max_n=5):
    return st.integers(1, max_n).flatmap(lambda n: int_matrix(n, n))


def symmetric(max_n=5):
    return square(max_n).map(lambda m: [[m[i][j] + m[j][i] for j in range(len(m))]
                                        for i in range(len(m))])


def rectangular():
    return st.tuples(st.integers(1, 5), st.integers(1, 6)).flatmap(lambda rc: int_matrix(*rc))


def to_sympy(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row]
                         for row in la.mat(m)])


# -- construction -------------------------------------------------------------

def test_standard_omega():
    assert la.standard_omega(1) == [[0, -1], [1, 0]]
    assert la.standard_omega(2) == [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_omega_antisymmetric(n):
    om = la.standard_omega(n)
    assert la.mat_equal(la.transpose(om), la.neg(om))


def test_symp_space_validation():
    with pytest.raises(ValueError):
        la.SympSpace([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        la.SympSpace([[0, 0], [0, 0]])
    with pytest.raises(DimensionMismatch):
        la.SympSpace([[0]])
    with pytest.raises(ValueError):
        la.standard_symplectic_space(0)


# -- elimination, oracle: sympy --------------------------------------------

@given(rectangular())
def test_rank_matches_sympy(m):
    assert la.rank(m) == to_sympy(m).rank()


@given(rectangular())
def test_nullspace(m):
    ns = la.nullspace(m)
    ncols = len(m[0])
    assert len(ns) == ncols - to_sympy(m).rank()
    for v in ns:
        assert not any(la.mat_vec(la.mat(m), v))
    assert la.span_rank(ns) == len(ns)


@given(square())
def test_inverse(m):
    m = la.mat(m)
    if to_sympy(m).det() == 0:
        with pytest.raises(ZeroDivisionError):
            la.inverse(m)
        return
    inv = la.inverse(m)
    assert la.mat_equal(la.matmul(m, inv), la.identity(len(m)))
    assert to_sympy(inv) == to_sympy(m).inv()


@given(square(4), st.lists(small, min_size=4, max_size=4))
def test_solve(m, x):
    m = la.mat(m)
    x = [Fraction(v) for v in x[:len(m)]]
    rhs = la.mat_vec(m, x)
    sol = la.solve(m, rhs)
    assert sol is not None
    assert la.mat_vec(m, sol) == rhs


def test_solve_inconsistent():
    assert la.solve([[1, 1], [2, 2]], [1, 3]) is None


@given(int_matrix(3, 4), int_matrix(4, 2))
def test_matmul_matches_sympy(a, b):
    assert to_sympy(la.matmul(la.mat(a), la.mat(b))) == to_sympy(a) * to_sympy(b)


def test_matmul_quadratic_entries():
    r = QuadExt(0, 1, 6)
    m = [[r, 0], [0, r]]
    assert la.matmul(m, m) == [[6, 0], [0, 6]]


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=6))
def test_spans(vecs):
    basis = la.span_basis(vecs)
    assert la.same_span(basis, vecs)
    assert len(basis) == la.span_rank(vecs)
    for v in vecs:
        c = la.coordinates(basis, v)
        assert la.vec_lincomb(c, basis, 4) == [Fraction(x) for x in v]


def test_block_matrix():
    m = la.block_matrix([[la.identity(1), None], [None, [[2, 3]]]], [1, 1], [1, 2])
    assert m == [[1, 0, 0], [0, 2, 3]]


# -- symplectic predicates -----------------------------------------------------

def test_inf_symplectic_examples():
    s1 = la.standard_symplectic_space(1)
    s2 = la.standard_symplectic_space(2)
    assert la.is_inf_symplectic(s2, la.zeros(4))
    assert la.is_inf_symplectic(s1, [[1, 0], [0, -1]])
    assert not la.is_inf_symplectic(s2, la.identity(4))
    with pytest.raises(DimensionMismatch):
        la.is_inf_symplectic(s2, la.identity(2))


@given(st.lists(small, min_size=4, max_size=4), st.lists(small, min_size=4, max_size=4))
def test_antisymplectic_symmetric_rank_two(x, y):
    s = la.standard_symplectic_space(2)
    # B = Y (x) X_ - X (x) Y_ with U_ = Omega(U, .)
    b = la.sub(la.outer(y, s.flat(x)), la.outer(x, s.flat(y)))
    assert la.is_antisymplectic_symmetric(s, b)


def test_antisymplectic_examples():
    s = la.standard_symplectic_space(2)
    # Omega Id = Omega is antisymmetric, so Omega(X, Id Y) = Omega(Id X, Y) holds
    assert la.is_antisymplectic_symmetric(s, la.identity(4))
    assert not la.is_antisymplectic_symmetric(s, la.standard_omega(2))
    assert la.is_antisymplectic_symmetric(s, la.zeros(4))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_basis_dimensions(n):
    s = la.standard_symplectic_space(n)
    sp = la.sp_basis(s)
    anti = la.antisymplectic_basis(s)
    assert len(sp) == n * (2 * n + 1)
    assert len(anti) == n * (2 * n - 1)
    assert all(la.is_inf_symplectic(s, m) for m in sp)
    assert all(la.is_antisymplectic_symmetric(s, m) for m in anti)
    assert la.span_rank([la.flatten(m) for m in sp + anti]) == (2 * n) ** 2


# -- forms -----------------------------------------------------------------

def test_signature_examples():
    assert la.signature([[1, 0, 0], [0, 1, 0], [0, 0, -1]]) == (2, 1)
    assert la.signature(la.zeros(3)) == (0, 0)
    assert la.signature([[0, 1], [1, 0]]) == (1, 1)


@given(symmetric())
def test_signature_matches_eigenvalues(m):
    eig = to_sympy(m).eigenvals()
    pos = sum(k for v, k in eig.items() if sympy.re(sympy.N(v, 30)) > 1e-20)
    negs = sum(k for v, k in eig.items() if sympy.re(sympy.N(v, 30)) < -1e-20)
    assert la.signature(m) == (pos, negs)


@given(symmetric(4), st.lists(small, min_size=16, max_size=16))
def test_signature_congruence_invariant(m, p):
    n = len(m)
    p = [p[i * 4:i * 4 + n] for i in range(n)]
    assume(la.rank(p) == n)
    congruent = la.matmul(la.transpose(la.mat(p)), la.matmul(la.mat(m), la.mat(p)))
    assert la.signature(congruent) == la.signature(m)


def test_signature_over_quadratic_field():
    r = QuadExt(0, 1, 2)
    # eigenvalues 1 +- sqrt 2 of [[1, r], [r, 1]]
    assert la.signature([[1, r], [r, 1]]) == (1, 1)
    assert la.signature([[2, r], [r, 2]]) == (2, 0)


def test_bilinear_form_detect():
    assert la.BilinearForm.detect([[1, 2], [2, 1]]).symmetry == la.SYMMETRIC
    assert la.BilinearForm.detect([[0, 2], [-2, 0]]).symmetry == la.ANTISYMMETRIC
    assert la.BilinearForm.detect([[0, 2], [1, 0]]).symmetry == la.NONE
    with pytest.raises(ValueError):
        la.BilinearForm([[0, 2], [1, 0]], la.SYMMETRIC)


# -- subspaces -----------------------------------------------------------------

def test_lagrangian_coordinate_subspace():
    s = la.standard_symplectic_space(3)
    info = la.subspace_ops(s, [la.unit(6, i) for i in range(3)])
    assert info.is_lagrangian
    assert la.same_span(info.symplectic_orthogonal, info.basis)


def test_orthogonal_of_whole_space():
    s = la.standard_symplectic_space(2)
    info = la.subspace_ops(s, [la.unit(4, i) for i in range(4)])
    assert info.symplectic_orthogonal == []
    assert not info.is_isotropic


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=3))
def test_orthogonal_dimension(vecs):
    s = la.standard_symplectic_space(2)
    info = la.subspace_ops(s, vecs)
    assert len(info.basis) + len(info.symplectic_orthogonal) == 4
    for u in info.basis:
        for w in info.symplectic_orthogonal:
            assert s.form(u, w) == 0


def test_scalar_identity_detection():
    assert la.is_scalar_multiple_of_identity([[3, 0], [0, 3]]) == 3
    assert la.is_scalar_multiple_of_identity([[3, 0], [0, 2]]) is None
    assert la.is_scalar_multiple_of_identity([[3, 1], [0, 3]]) is None
