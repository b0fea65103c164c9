"""Symplectic curvature tensors, the Ricci trace and the Ricci-type part.

A tensor is stored by its values ``R(e_i, e_j)`` for ``i < j``; each value is
an endomorphism whose column ``k`` is ``R(e_i, e_j) e_k``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping

from . import linalg as la
from .errors import NotAdmissibleError
from .linalg import Matrix, SympSpace

Pair = tuple[int, int]


def kappa(space: SympSpace) -> Fraction:
    """The normalising constant 1/(2n+2) of a space of dimension 2n."""
    return Fraction(1, space.dim + 2)


@dataclass(frozen=True, eq=False)
class CurvatureTensor:
    space: SympSpace
    values: Mapping[Pair, Matrix]

    def __post_init__(self):
        dim = self.space.dim
        vals = {}
        for (i, j), m in self.values.items():
            if not 0 <= i < dim or not 0 <= j < dim or i == j:
                raise ValueError(f"bad index pair {(i, j)}")
            if la.shape(m) != (dim, dim):
                raise la.DimensionMismatch(f"value at {(i, j)} has shape {la.shape(m)}")
            m = la.mat(m)
            if i > j:
                i, j, m = j, i, la.neg(m)
            if (i, j) in vals:
                raise ValueError(f"pair {(i, j)} given twice")
            vals[(i, j)] = m
        for pair in combinations(range(dim), 2):
            vals.setdefault(pair, la.zeros(dim))
        object.__setattr__(self, "values", vals)

    @classmethod
    def zero(cls, space: SympSpace) -> CurvatureTensor:
        return cls(space, {})

    @property
    def kappa(self) -> Fraction:
        return kappa(self.space)

    def __call__(self, i: int, j: int) -> Matrix:
        if i == j:
            return la.zeros(self.space.dim)
        if i < j:
            return self.values[(i, j)]
        return la.neg(self.values[(j, i)])

    def apply(self, x, y) -> Matrix:
        """``R(X, Y)`` for coordinate vectors X, Y."""
        coeffs, mats = [], []
        for (i, j), m in self.values.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                coeffs.append(c)
                mats.append(m)
        return la.lincomb(coeffs, mats, (self.space.dim, self.space.dim))

    def is_zero(self) -> bool:
        return all(la.is_zero(m) for m in self.values.values())

    def is_symplectic(self) -> bool:
        """Every value is infinitesimally symplectic."""
        return all(la.is_inf_symplectic(self.space, m) for m in self.values.values())

    def __add__(self, other: CurvatureTensor) -> CurvatureTensor:
        return CurvatureTensor(
            self.space, {p: la.add(m, other.values[p]) for p, m in self.values.items()}
        )

    def __sub__(self, other: CurvatureTensor) -> CurvatureTensor:
        return CurvatureTensor(
            self.space, {p: la.sub(m, other.values[p]) for p, m in self.values.items()}
        )

    def scaled(self, c) -> CurvatureTensor:
        return CurvatureTensor(self.space, {p: la.scale(c, m) for p, m in self.values.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurvatureTensor) or other.space != self.space:
            return NotImplemented
        return all(la.mat_equal(m, other.values[p]) for p, m in self.values.items())

    __hash__ = None


@dataclass(frozen=True, eq=False)
class RicciData:
    """Ricci form ``r``, its endomorphism ``A`` (r(X,Y) = Omega(X, AY)) and
    ``lam`` with ``A^2 = lam Id`` when A^2 is scalar."""

    r: la.BilinearForm
    A: Matrix
    lam: Fraction | None
    kappa: Fraction

    @classmethod
    def from_endomorphism(cls, space: SympSpace, a: Matrix) -> RicciData:
        a = la.mat(a)
        if not la.is_inf_symplectic(space, a):
            raise NotAdmissibleError("A is not infinitesimally symplectic")
        r = la.BilinearForm(la.matmul(space.omega, a), la.SYMMETRIC)
        return cls(r, a, square_scalar(a), kappa(space))


def square_scalar(a: Matrix):
    """``lam`` with ``A^2 == lam Id``, or None."""
    return la.is_scalar_multiple_of_identity(la.matmul(a, a))


def ricci(R: CurvatureTensor) -> la.BilinearForm:
    """``r(e_i, e_j) = sum_k (R(e_i, e_k) e_j)_k``: trace of Z -> R(X, Z)Y."""
    dim = R.space.dim
    r = la.zeros(dim)
    for i in range(dim):
        for k in range(dim):
            if i == k:
                continue
            m = R(i, k)
            row_k = m[k]
            for j in range(dim):
                if row_k[j]:
                    r[i][j] = r[i][j] + row_k[j]
    return la.BilinearForm.detect(r)


def endomorphism_from_ricci(space: SympSpace, r) -> Matrix:
    """Solve ``Omega(X, AY) = r(X, Y)``: ``A = Omega^{-1} r``."""
    m = r.matrix if isinstance(r, la.BilinearForm) else la.mat(r)
    if not la.is_symmetric(m):
        raise ValueError("Ricci form must be symmetric")
    return la.matmul(space.omega_inv, m)


def ricci_type_curvature(space: SympSpace, a: Matrix) -> CurvatureTensor:
    """The curvature determined by A alone:

    R(X,Y)Z = k[2w(X,Y)AZ + w(X,Z)AY - w(Y,AZ)X - w(Y,Z)AX + w(X,AZ)Y],
    k = 1/(2n+2), evaluated on every basis triple.
    """
    a = la.mat(a)
    if la.shape(a) != (space.dim, space.dim):
        raise la.DimensionMismatch("A has the wrong size")
    if not la.is_inf_symplectic(space, a):
        raise NotAdmissibleError("A is not infinitesimally symplectic")
    dim = space.dim
    w = space.omega
    wa = la.matmul(w, a)
    k = kappa(space)
    acols = la.transpose(a)  # acols[k] = A e_k
    values = {}
    for i, j in combinations(range(dim), 2):
        cols = []
        for z in range(dim):
            col = [Fraction(0)] * dim
            terms = (
                (2 * w[i][j], acols[z]),
                (w[i][z], acols[j]),
                (-w[j][z], acols[i]),
            )
            for c, v in terms:
                if c:
                    for t in range(dim):
                        if v[t]:
                            col[t] += c * v[t]
            col[i] -= wa[j][z]
            col[j] += wa[i][z]
            cols.append([k * x for x in col])
        values[(i, j)] = la.transpose(cols)
    return CurvatureTensor(space, values)


@dataclass(frozen=True, eq=False)
class WeylDecomposition:
    W: CurvatureTensor
    ricci_data: RicciData
    is_ricci_type: bool


def weyl_part(R: CurvatureTensor) -> WeylDecomposition:
    """Split off the Ricci-type part: ``W = R - E(A_R)``.

    For tensors violating the first Bianchi identity the Ricci form may be
    non-symmetric; its symmetric part is used, so ``ricci(W)`` then keeps
    the antisymmetric remainder.
    """
    r = ricci(R).matrix
    if not la.is_symmetric(r):
        r = [[(r[i][j] + r[j][i]) / 2 for j in range(len(r))] for i in range(len(r))]
    a = endomorphism_from_ricci(R.space, r)
    data = RicciData(la.BilinearForm(r, la.SYMMETRIC), a, square_scalar(a), R.kappa)
    W = R - ricci_type_curvature(R.space, a)
    return WeylDecomposition(W, data, W.is_zero())


def first_bianchi_defect(R: CurvatureTensor) -> dict[tuple[int, int, int], list]:
    """``R(e_i,e_j)e_k + R(e_j,e_k)e_i + R(e_k,e_i)e_j`` for ``i < j < k``.

    The cyclic sum is alternating in (i, j, k), so these triples determine it.
    """
    dim = R.space.dim
    out = {}
    for i, j, k in combinations(range(dim), 3):
        vec = [Fraction(0)] * dim
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            m = R(a, b)
            for t in range(dim):
                vec[t] += m[t][c]
        out[(i, j, k)] = vec
    return out


def satisfies_bianchi(R: CurvatureTensor) -> bool:
    return all(not any(v) for v in first_bianchi_defect(R).values())


def product_curvature(R1: CurvatureTensor, R2: CurvatureTensor) -> CurvatureTensor:
    """``R(X,Y)Z = R1(X1,Y1)Z1 + R2(X2,Y2)Z2`` on the direct sum."""
    space = la.direct_sum(R1.space, R2.space)
    d1, d2 = R1.space.dim, R2.space.dim
    values = {}
    for (i, j), m in R1.values.items():
        values[(i, j)] = la.block_diag(m, la.zeros(d2))
    for (i, j), m in R2.values.items():
        values[(d1 + i, d1 + j)] = la.block_diag(la.zeros(d1), m)
    return CurvatureTensor(space, values)


def cross_term(s1: SympSpace, s2: SympSpace, a2: Matrix) -> dict[Pair, Matrix]:
    """Cross block of the W-part of ``E(0) x E(A2)`` on ``s1 + s2``.

    For each basis pair i < j of ``s1`` returns the matrix of
    ``Z2 -> W(e_i, e_j) Z2`` (columns indexed by the basis of ``s2``, rows by
    the full direct sum).  The block only depends on ``A2``.
    """
    R = product_curvature(CurvatureTensor.zero(s1), ricci_type_curvature(s2, a2))
    W = weyl_part(R).W
    return cross_block(W, s1.dim)


def cross_block(W: CurvatureTensor, d1: int) -> dict[Pair, Matrix]:
    return {
        (i, j): [row[d1:] for row in W(i, j)]
        for i, j in combinations(range(d1), 2)
    }


# -- the space of all symplectic curvature tensors ---------------------------

def curvature_space_basis(space: SympSpace) -> list[CurvatureTensor]:
    """Basis of tensors that are antisymmetric, symplectic-valued and satisfy
    the first Bianchi identity (exact nullspace of the Bianchi system)."""
    dim = space.dim
    spb = la.sp_basis(space)
    pairs = list(combinations(range(dim), 2))
    pidx = {p: t for t, p in enumerate(pairs)}
    nsp = len(spb)
    ncols = len(pairs) * nsp
    rows = []
    for i, j, k in combinations(range(dim), 3):
        block = [[Fraction(0)] * ncols for _ in range(dim)]
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            sgn = 1 if a < b else -1
            base = pidx[(min(a, b), max(a, b))] * nsp
            for s, m in enumerate(spb):
                for t in range(dim):
                    if m[t][c]:
                        block[t][base + s] += sgn * m[t][c]
        rows.extend(block)
    basis = []
    for vec in la.nullspace(rows, ncols):
        values = {}
        for p, t in pidx.items():
            coeffs = vec[t * nsp:(t + 1) * nsp]
            values[p] = la.lincomb(coeffs, spb)
        basis.append(CurvatureTensor(space, values))
    return basis


def random_curvature_tensor(space: SympSpace, rng: random.Random, basis=None,
                            bound: int = 2) -> CurvatureTensor:
    """Random small-integer combination of ``curvature_space_basis``."""
    basis = basis if basis is not None else curvature_space_basis(space)
    R = CurvatureTensor.zero(space)
    for T in basis:
        c = rng.randint(-bound, bound)
        if c:
            R = R + T.scaled(c)
    return R


def random_admissible(space: SympSpace, rng: random.Random, bound: int = 3) -> Matrix:
    """``Omega^{-1} S`` for a random symmetric integer matrix S."""
    dim = space.dim
    s = la.zeros(dim)
    for i in range(dim):
        for j in range(i, dim):
            s[i][j] = s[j][i] = Fraction(rng.randint(-bound, bound))
    return la.matmul(space.omega_inv, s)
