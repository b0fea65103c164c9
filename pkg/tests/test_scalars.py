from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rtk.errors import MixedDiscriminantError
from rtk.scalars import (QuadExt, as_scalar, scalar_arith, scalar_from_json, scalar_to_json,
                         sign, squarefree_decompose, try_sqrt)

rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
discriminants = st.sampled_from([2, 3, 5, 6, 7, 10, 11, 13, 15])


def quad(d):
    return st.builds(lambda a, b: QuadExt(a, b, d), rationals, rationals)


def test_rational_scaling():
    assert scalar_arith(Fraction(1, 6), 3, "mul") == Fraction(1, 2)


def test_sqrt6_squared():
    r6 = QuadExt(0, 1, 6)
    assert scalar_arith(r6, r6, "mul") == 6
    assert isinstance(r6 * r6, QuadExt)


def test_conjugate_sum():
    x = QuadExt(Fraction(1, 2), Fraction(1, 3), 6)
    y = QuadExt(Fraction(1, 2), Fraction(-1, 3), 6)
    assert scalar_arith(x, y, "add") == 1
    assert x + y == Fraction(1)


@pytest.mark.parametrize("x, root", [(9, 3), (Fraction(4, 9), Fraction(2, 3)), (0, 0), (6, None)])
def test_try_sqrt(x, root):
    assert try_sqrt(x) == root


def test_try_sqrt_negative_raises():
    with pytest.raises(ValueError):
        try_sqrt(-4)


def test_mixed_discriminants_raise():
    with pytest.raises(MixedDiscriminantError):
        QuadExt(0, 1, 2) + QuadExt(0, 1, 3)
    with pytest.raises(TypeError):
        QuadExt(0, 1, 2) * QuadExt(1, 1, 5)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_arith(1, 0, "div")
    with pytest.raises(ZeroDivisionError):
        QuadExt(1, 1, 2) / QuadExt(0, 0, 2)


def test_non_squarefree_discriminant_rejected():
    with pytest.raises(ValueError):
        QuadExt(1, 1, 8)


def test_sqrt_of():
    assert QuadExt.sqrt_of(Fraction(1, 6)) == QuadExt(0, Fraction(1, 6), 6)
    assert QuadExt.sqrt_of(Fraction(1, 6)) ** 2 == Fraction(1, 6)
    assert QuadExt.sqrt_of(12) == QuadExt(0, 2, 3)
    assert QuadExt.sqrt_of(Fraction(9, 4)) == Fraction(3, 2)


@given(st.integers(1, 10**6))
def test_squarefree_decompose(m):
    c, d = squarefree_decompose(m)
    assert c * c * d == m
    assert all(d % (p * p) for p in range(2, math.isqrt(d) + 1))


@given(discriminants.flatmap(lambda d: st.tuples(quad(d), quad(d), quad(d))))
def test_field_axioms(xyz):
    x, y, z = xyz
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@given(discriminants.flatmap(quad))
def test_sign_matches_float(x):
    f = float(x.a) + float(x.b) * math.sqrt(x.d)
    if abs(f) > 1e-9:
        assert sign(x) == (1 if f > 0 else -1)
    assert sign(x * x) >= 0
    assert x.norm() == (x * x.conjugate()).to_rational()


@given(discriminants.flatmap(lambda d: st.tuples(quad(d), quad(d))))
def test_ordering_consistent_with_sign(xy):
    x, y = xy
    assert (x < y) == (sign(y - x) > 0)


@given(rationals)
def test_rational_embedding_hash_eq(r):
    q = QuadExt(r, 0, 5)
    assert q == r
    assert hash(q) == hash(r)


@given(rationals, rationals, discriminants)
def test_promotion(r, a, d):
    x = QuadExt(a, 1, d)
    assert scalar_arith(r, x, "add") == QuadExt(r + a, 1, d)
    assert scalar_arith(r, x, "mul") == QuadExt(r * a, r, d)


@given(st.one_of(rationals, discriminants.flatmap(quad)))
def test_json_round_trip(x):
    assert scalar_from_json(scalar_to_json(x)) == x


def test_json_formats():
    assert scalar_to_json(Fraction(-3, 4)) == "-3/4"
    assert scalar_to_json(Fraction(5)) == "5"
    assert scalar_to_json(QuadExt(1, Fraction(1, 2), 6)) == {"a": "1", "b": "1/2", "d": 6}
    assert scalar_from_json(3) == 3
    with pytest.raises(ValueError):
        scalar_from_json(1.5)
    with pytest.raises(ValueError):
        scalar_from_json(True)
    assert as_scalar("2/4") == Fraction(1, 2)
