"""Finite-dimensional Lie algebras given by exact structure constants.

Only what the triple diagnostics need: brackets of coordinate vectors,
spans of brackets, derived and lower central series, ideals, quotients and
the Killing form.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import kernels
from . import linalg as la
from .errors import NotAnIdealError


class LieAlgebra:
    """``c[i][j][k]``: coefficient of ``x_k`` in ``[x_i, x_j]``."""

    def __init__(self, c: list):
        self.c = c
        self.dim = len(c)

    @cached_property
    def _nz(self):
        return kernels.sparse_table(self.c, self.dim)

    @cached_property
    def _zero(self):
        for plane in self.c:
            for row in plane:
                for x in row:
                    return x * 0
        return Fraction(0)

    def bracket(self, x: Sequence, y: Sequence) -> list:
        return kernels.bracket(self._nz, self.dim, x, y, self._zero)

    def jacobi_failures(self, limit: int = -1) -> list[tuple[int, int, int]]:
        return kernels.jacobi_failures(self.c, self.dim, self._zero, limit)

    def antisymmetry_failures(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.dim)
            for j in range(i, self.dim)
            if any(a + b for a, b in zip(self.c[i][j], self.c[j][i]))
        ]

    def unit(self, i: int) -> list:
        return la.unit(self.dim, i)

    def bracket_span(self, u: Sequence, w: Sequence) -> list:
        """Reduced basis of ``span [U, W]``."""
        return la.span_basis([self.bracket(x, y) for x in u for y in w])

    def derived_series(self) -> list[list]:
        """Subspaces g, [g,g], ... until the dimension stops dropping."""
        current = [self.unit(i) for i in range(self.dim)]
        series = [current]
        while current:
            nxt = self.bracket_span(current, current)
            if len(nxt) == len(current):
                break
            series.append(nxt)
            current = nxt
        return series

    def lower_central_series(self, ideal: Sequence) -> list[list]:
        """``I, [I, I], [I, [I, I]], ...`` until stable."""
        base = la.span_basis(ideal)
        current = base
        series = [current]
        while current:
            nxt = self.bracket_span(base, current)
            if len(nxt) == len(current):
                break
            series.append(nxt)
            current = nxt
        return series

    def is_ideal(self, basis: Sequence) -> bool:
        if not basis:
            return True
        everything = [self.unit(i) for i in range(self.dim)]
        return la.contains_span(basis, self.bracket_span(everything, basis))

    def is_subalgebra(self, basis: Sequence) -> bool:
        if not basis:
            return True
        return la.contains_span(basis, self.bracket_span(basis, basis))

    def killing_form(self) -> list:
        return kernels.killing_matrix(self.c, self.dim, self._zero)

    def restrict(self, basis: Sequence) -> LieAlgebra:
        """Structure constants of a subalgebra in the given basis."""
        basis = [list(b) for b in basis]
        if not self.is_subalgebra(basis):
            raise ValueError("span is not closed under the bracket")
        m = la.transpose(basis)
        c = []
        for x in basis:
            plane = []
            for y in basis:
                coords = la.solve(m, self.bracket(x, y))
                plane.append(coords)
            c.append(plane)
        return LieAlgebra(c)

    def quotient(self, ideal: Sequence) -> LieAlgebra:
        """Structure constants of ``g / I`` on complementary unit vectors."""
        ideal = la.span_basis(ideal)
        if not self.is_ideal(ideal):
            raise NotAnIdealError("basis does not span an ideal")
        pivots = set(la.rref(ideal)[1]) if ideal else set()
        comp = [i for i in range(self.dim) if i not in pivots]
        # coordinates w.r.t. [ideal basis, complement units]; keep the latter
        full = [list(v) for v in ideal] + [self.unit(i) for i in comp]
        m = la.transpose(full)
        k = len(ideal)
        c = []
        for i in comp:
            plane = []
            for j in comp:
                coords = la.solve(m, self.bracket(self.unit(i), self.unit(j)))
                plane.append(coords[k:])
            c.append(plane)
        return LieAlgebra(c)


def killing_rank_signature(alg: LieAlgebra) -> tuple[int, tuple[int, int]]:
    if alg.dim == 0:
        return 0, (0, 0)
    b = alg.killing_form()
    return la.rank(b), la.signature(b)


def matrix_algebra(mats: Sequence) -> LieAlgebra:
    """Structure constants of the linear span of independent matrices under
    the commutator."""
    flat = [la.flatten(m) for m in mats]
    m = la.transpose(flat)
    c = []
    for a in mats:
        plane = []
        for b in mats:
            coords = la.solve(m, la.flatten(la.commutator(a, b)))
            if coords is None:
                raise ValueError("span is not closed under the commutator")
            plane.append(coords)
        c.append(plane)
    return LieAlgebra(c)
