from __future__ import annotations

from fractions import Fraction

import pytest

from rtk import linalg as la
from rtk.errors import NotAnIdealError
from rtk.lie import killing_rank_signature, matrix_algebra


def sl2():
    e = [[0, 1], [0, 0]]
    f = [[0, 0], [1, 0]]
    h = [[1, 0], [0, -1]]
    return matrix_algebra([la.mat(e), la.mat(f), la.mat(h)])


def so3():
    mats = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        m = la.zeros(3)
        m[i][j], m[j][i] = Fraction(1), Fraction(-1)
        mats.append(m)
    return matrix_algebra(mats)


def heisenberg():
    mats = []
    for i, j in ((0, 1), (1, 2), (0, 2)):
        m = la.zeros(3)
        m[i][j] = Fraction(1)
        mats.append(m)
    return matrix_algebra(mats)


def test_sl2_killing():
    g = sl2()
    # B(h, h) = 8, B(e, f) = 4
    assert g.killing_form() == [[0, 4, 0], [4, 0, 0], [0, 0, 8]]
    assert killing_rank_signature(g) == (3, (2, 1))


def test_so3_killing_negative_definite():
    assert killing_rank_signature(so3()) == (3, (0, 3))


def test_jacobi_and_antisymmetry_hold():
    for g in (sl2(), so3(), heisenberg()):
        assert g.jacobi_failures() == []
        assert g.antisymmetry_failures() == []


def test_jacobi_failure_detected():
    g = sl2()
    c = [[list(row) for row in plane] for plane in g.c]
    # [e, f] = h + e breaks Jacobi on (e, f, h)
    c[0][1][0] += 1
    c[1][0][0] -= 1
    bad = type(g)(c)
    assert bad.jacobi_failures()
    assert len(bad.jacobi_failures(limit=1)) == 1


def test_series():
    h = heisenberg()
    assert [len(s) for s in h.derived_series()] == [3, 1, 0]
    everything = [h.unit(i) for i in range(3)]
    assert [len(s) for s in h.lower_central_series(everything)] == [3, 1, 0]
    assert [len(s) for s in sl2().derived_series()] == [3]
    assert killing_rank_signature(h) == (0, (0, 0))


def test_ideals_and_quotients():
    h = heisenberg()
    centre = [h.unit(2)]
    assert h.is_ideal(centre)
    q = h.quotient(centre)
    assert q.dim == 2
    assert all(not any(v) for plane in q.c for v in plane)
    g = sl2()
    with pytest.raises(NotAnIdealError):
        g.quotient([g.unit(2)])
    assert g.is_subalgebra([g.unit(2)])
    sub = g.restrict([g.unit(0), g.unit(2)])
    assert sub.dim == 2 and sub.jacobi_failures() == []
