from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rtk import linalg as la
from rtk.curvature import random_admissible, ricci_type_curvature
from rtk.errors import InvalidTripleError, NonScalarSquareError, NotAdmissibleError
from rtk.models import build_negative_model, build_positive_model, build_zero_model
from rtk.triple import (SymmetricTriple, build_triple_from_A, commutant_sp, curvature_of_triple,
                        k_from_lemma, k_span_equal, lie_diagnostics, triple_from_brackets,
                        validate_triple)


def sl_A(n, a=None):
    a = n + 1 if a is None else a
    return la.block_diag(la.scale(a, la.identity(n)), la.scale(-a, la.identity(n)))


def test_flat_triple():
    S = la.standard_symplectic_space(2)
    T = build_triple_from_A(S, la.zeros(4))
    assert T.dim_k == 0 and T.dim == 4
    assert validate_triple(T).ok
    assert curvature_of_triple(T).is_zero()
    diag = lie_diagnostics(T)
    assert diag.derived_series_dims == [4, 0]
    assert diag.solvable


def test_sl_dimensions():
    S = la.standard_symplectic_space(2)
    T = build_triple_from_A(S, sl_A(2))
    assert (T.dim_k, T.dim) == (4, 8)


def test_rank_one_dimensions():
    m = build_zero_model(2, 1, 0)
    T = build_triple_from_A(m.triple.space, m.A)
    r, n = 1, 2
    assert T.dim_k == r * (r - 1) // 2 + r * (r + 1) // 2 + (2 * n - 2 * r) * r == 3
    assert T.dim == 7


@pytest.mark.parametrize("n", [2, 3])
def test_generated_triples_validate(n):
    for model in (build_positive_model(n), build_negative_model(n, 1, n - 1),
                  build_zero_model(n, 1, 1), build_zero_model(n, n, 1)):
        T = build_triple_from_A(model.triple.space, model.A)
        rep = validate_triple(T)
        assert rep.ok, rep.failed()


@pytest.mark.parametrize("n", [2, 3])
def test_round_trip_curvature(n):
    for model in (build_positive_model(n), build_negative_model(n, n, 0), build_zero_model(n, 2, 1)):
        S = model.triple.space
        T = build_triple_from_A(S, model.A)
        assert curvature_of_triple(T) == ricci_type_curvature(S, model.A)


def test_rejections():
    S = la.standard_symplectic_space(2)
    with pytest.raises(NotAdmissibleError):
        build_triple_from_A(S, la.identity(4))
    a = la.mat([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 0]])
    with pytest.raises(NonScalarSquareError):
        build_triple_from_A(S, a)


@given(st.integers(0, 10**6))
def test_random_admissible_nonscalar_rejected(seed):
    S = la.standard_symplectic_space(2)
    a = random_admissible(S, random.Random(seed))
    sq = la.is_scalar_multiple_of_identity(la.matmul(a, a))
    if sq is None:
        with pytest.raises(NonScalarSquareError):
            build_triple_from_A(S, a)
    else:
        assert validate_triple(build_triple_from_A(S, a)).ok


def test_identity_in_k_fails_omega_check():
    T = build_positive_model(2).triple
    bad = SymmetricTriple(T.space, (la.identity(4),) + T.k_basis[1:], T.pp_bracket)
    rep = validate_triple(bad)
    assert "omega_invariant" in rep.failed()
    assert not rep.ok


def test_zeroed_bracket_detected():
    T = build_positive_model(2).triple
    pp = dict(T.pp_bracket)
    pair = next(p for p, c in pp.items() if any(c))
    pp[pair] = [Fraction(0)] * T.dim_k
    rep = validate_triple(SymmetricTriple(T.space, T.k_basis, pp))
    assert set(rep.failed()) & {"jacobi", "pp_spans_k"}
    assert "jacobi" in rep.failed()


def test_non_closed_k_detected():
    S = la.standard_symplectic_space(1)
    sp = la.sp_basis(S)
    # two nilpotent elements whose commutator is diagonal
    T = SymmetricTriple(S, (sp[0], sp[2]), {(0, 1): [1, 0]})
    rep = validate_triple(T)
    assert "closure" in rep.failed()
    with pytest.raises(InvalidTripleError):
        T.algebra


def test_triple_from_brackets_errors():
    S = la.standard_symplectic_space(1)
    k = la.sp_basis(S)[0]
    with pytest.raises(InvalidTripleError):
        triple_from_brackets(S, [k, k], {})
    with pytest.raises(InvalidTripleError):
        triple_from_brackets(S, [k], {(0, 1): la.sp_basis(S)[1]})
    with pytest.raises(InvalidTripleError):
        triple_from_brackets(S, [], {(0, 1): k})


def test_report_json_shape():
    rep = validate_triple(build_positive_model(2).triple).to_json()
    assert rep["ok"] is True
    assert list(rep["checks"]) == ["k_independent", "omega_invariant", "pp_spans_k",
                                   "closure", "jacobi"]


# -- k described through A ----------------------------------------------------------

def test_lemma_zero():
    assert k_from_lemma(la.standard_symplectic_space(2), la.zeros(4)) == []


@pytest.mark.parametrize("n", [2, 3])
def test_lemma_matches_commutant_for_nonzero_lambda(n):
    S = la.standard_symplectic_space(n)
    k = k_from_lemma(S, sl_A(n))
    assert len(k) == n * n
    assert k_span_equal(k, commutant_sp(S, sl_A(n)))
    assert k_span_equal(k, build_triple_from_A(S, sl_A(n)).k_basis)


def test_lemma_rank_one():
    m = build_zero_model(2, 1, 1)
    k = k_from_lemma(m.triple.space, m.A)
    assert len(k) == 3
    assert k_span_equal(k, m.triple.k_basis)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_commutant_of_zero(n):
    assert len(commutant_sp(la.standard_symplectic_space(n), la.zeros(2 * n))) == n * (2 * n + 1)


@pytest.mark.parametrize("n, p", [(2, 1), (2, 2), (3, 0)])
def test_commutant_of_su_model(n, p):
    m = build_negative_model(n, p, n - p)
    assert len(commutant_sp(m.triple.space, m.A)) == n * n


# -- diagnostics ---------------------------------------------------------------

def test_sl_perfect_semisimple():
    diag = lie_diagnostics(build_triple_from_A(la.standard_symplectic_space(2), sl_A(2)))
    assert diag.derived_series_dims == [8]
    assert diag.perfect and not diag.solvable
    assert diag.killing_rank == 8


def test_rank_one_solvable():
    diag = lie_diagnostics(build_zero_model(2, 1, 0).triple)
    assert diag.derived_series_dims[-1] == 0
    assert diag.solvable
