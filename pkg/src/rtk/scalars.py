"""Exact scalars: rationals (``fractions.Fraction``) and a single real
quadratic extension Q(sqrt d).

Rationals are plain :class:`~fractions.Fraction` objects, which are always
stored in lowest terms with a positive denominator.  :class:`QuadExt`
represents ``a + b*sqrt(d)`` with rational ``a``, ``b`` and a fixed
square-free ``d > 1``.
"""
from __future__ import annotations

import math
import operator
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from .errors import MixedDiscriminantError

Scalar = Union[Fraction, "QuadExt"]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, QuadExt):
        return x.to_rational()
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def as_scalar(x) -> Scalar:
    """Coerce ints/strings to Fraction; QuadExt passes through."""
    if isinstance(x, QuadExt):
        return x
    return as_rational(x)


def squarefree_decompose(m: int) -> tuple[int, int]:
    """Return ``(c, d)`` with ``m == c*c*d`` and ``d`` square-free, for m > 0."""
    if m <= 0:
        raise ValueError("expected a positive integer")
    c, d = 1, 1
    rest = m
    p = 2
    while p * p <= rest:
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        c *= p ** (e // 2)
        if e % 2:
            d *= p
        p += 1
    d *= rest
    return c, d


def _isqrt_exact(m: int) -> int | None:
    r = math.isqrt(m)
    return r if r * r == m else None


def try_sqrt(x) -> Fraction | None:
    """Exact rational square root of ``x >= 0``, or None if irrational."""
    x = as_rational(x)
    if x < 0:
        raise ValueError(f"square root of negative rational {x}")
    p = _isqrt_exact(x.numerator)
    q = _isqrt_exact(x.denominator)
    if p is None or q is None:
        return None
    return Fraction(p, q)


class QuadExt:
    """Element ``a + b*sqrt(d)`` of the real field Q(sqrt d)."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 2):
        d = int(d)
        if d < 2 or squarefree_decompose(d)[0] != 1:
            raise ValueError(f"d must be a square-free integer > 1, got {d}")
        self.a = as_rational(a)
        self.b = as_rational(b)
        self.d = d

    @classmethod
    def sqrt_of(cls, x) -> Scalar:
        """``sqrt(x)`` for rational ``x > 0``: a Fraction when exact,
        otherwise a QuadExt over the square-free part of ``x``."""
        x = as_rational(x)
        if x < 0:
            raise ValueError("negative radicand")
        exact = try_sqrt(x)
        if exact is not None:
            return exact
        # sqrt(p/q) = sqrt(p*q)/q
        c, d = squarefree_decompose(x.numerator * x.denominator)
        return cls(0, Fraction(c, x.denominator), d)

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise MixedDiscriminantError(
                    f"Q(sqrt {self.d}) and Q(sqrt {other.d}) values cannot be combined"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return None

    def to_rational(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return self.a

    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def sign(self) -> int:
        a, b = self.a, self.b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with d*b^2
        return sa if a * a > self.d * b * b else sb

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadExt(self.a * other, self.b * other, self.d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadExt:
        nrm = self.norm()
        if nrm == 0:
            # d square-free and > 1, so the norm vanishes only at zero
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return QuadExt(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt d)")
            return QuadExt(self.a / other, self.b / other, self.d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadExt(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, QuadExt):
            if other.d != self.d:
                return not self.b and not other.b and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _cmp(self, other, op):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return op((self - o).sign(), 0)

    def __lt__(self, other):
        return self._cmp(other, operator.lt)

    def __le__(self, other):
        return self._cmp(other, operator.le)

    def __gt__(self, other):
        return self._cmp(other, operator.gt)

    def __ge__(self, other):
        return self._cmp(other, operator.ge)

    def __repr__(self) -> str:
        return f"QuadExt({str(self.a)!r}, {str(self.b)!r}, d={self.d})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt({self.d})"


def sign(x: Scalar) -> int:
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def scalar_arith(x, y, op: str) -> Scalar:
    """Exact field operation ``op`` in {add, sub, mul, div}.

    A Fraction operand meeting a QuadExt is embedded (``b = 0``) first;
    two QuadExt operands must share ``d``.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    x, y = as_scalar(x), as_scalar(y)
    if op == "div" and not y:
        raise ZeroDivisionError("division by zero")
    if isinstance(y, QuadExt) and not isinstance(x, QuadExt):
        x = QuadExt(x, 0, y.d)
    return fn(x, y)


# -- JSON -------------------------------------------------------------------

def scalar_to_json(x):
    if isinstance(x, QuadExt):
        return {"a": str(x.a), "b": str(x.b), "d": x.d}
    return str(as_rational(x))


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, dict):
        try:
            return QuadExt(Fraction(obj["a"]), Fraction(obj["b"]), int(obj["d"]))
        except KeyError as exc:
            raise ValueError(f"quadratic scalar missing key {exc}") from None
    if isinstance(obj, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(obj, (int, str)):
        return Fraction(obj)
    raise ValueError(f"cannot decode scalar from {obj!r}")
