"""Exact dense linear algebra and symplectic predicates.

Matrices are lists of row lists of exact scalars; vectors are flat lists.
Nothing here mutates its arguments.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import kernels
from .errors import DimensionMismatch
from .scalars import Scalar, as_scalar, sign

Matrix = list  # list[list[Scalar]]
Vector = list  # list[Scalar]

ZERO = Fraction(0)
ONE = Fraction(1)


# -- construction ----------------------------------------------------------

def mat(rows: Iterable[Iterable]) -> Matrix:
    """Copy ``rows`` into a fresh matrix of exact scalars."""
    return [[as_scalar(x) for x in row] for row in rows]


def zeros(nrows: int, ncols: int | None = None) -> Matrix:
    ncols = nrows if ncols is None else ncols
    return [[ZERO] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    m = zeros(n)
    for i in range(n):
        m[i][i] = ONE
    return m


def unit(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return v


def elementary(n: int, i: int, j: int) -> Matrix:
    m = zeros(n)
    m[i][j] = ONE
    return m


def block_matrix(blocks: Sequence[Sequence[Matrix | None]], sizes_r, sizes_c) -> Matrix:
    """Assemble from a grid of blocks; ``None`` stands for a zero block."""
    out = zeros(sum(sizes_r), sum(sizes_c))
    r0 = 0
    for bi, br in enumerate(blocks):
        c0 = 0
        for bj, blk in enumerate(br):
            if blk is not None:
                for i in range(sizes_r[bi]):
                    for j in range(sizes_c[bj]):
                        out[r0 + i][c0 + j] = as_scalar(blk[i][j])
            c0 += sizes_c[bj]
        r0 += sizes_r[bi]
    return out


def block_diag(*blocks: Matrix) -> Matrix:
    sizes = [len(b) for b in blocks]
    grid = [[blocks[i] if i == j else None for j in range(len(blocks))]
            for i in range(len(blocks))]
    return block_matrix(grid, sizes, sizes)


def submatrix(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[m[i][j] for j in cols] for i in rows]


# -- arithmetic ------------------------------------------------------------

def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != len(b):
        raise DimensionMismatch(f"cannot multiply {shape(a)} by {shape(b)}")
    return kernels.matmul(a, b)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    out = []
    for row in m:
        s = ZERO
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


def vec_mat(v: Vector, m: Matrix) -> Vector:
    return mat_vec(transpose(m), v)


def dot(u: Vector, v: Vector):
    s = ZERO
    for x, y in zip(u, v):
        if x and y:
            s = s + x * y
    return s


def add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def scale(c, a: Matrix) -> Matrix:
    c = as_scalar(c)
    return [[c * x for x in row] for row in a]


def neg(a: Matrix) -> Matrix:
    return [[-x for x in row] for row in a]


def lincomb(coeffs: Sequence, mats: Sequence[Matrix], shape_hint=None) -> Matrix:
    if not mats:
        if shape_hint is None:
            raise ValueError("empty combination needs a shape")
        return zeros(*shape_hint)
    out = zeros(*shape(mats[0]))
    for c, m in zip(coeffs, mats):
        if not c:
            continue
        for i, row in enumerate(m):
            orow = out[i]
            for j, x in enumerate(row):
                if x:
                    orow[j] = orow[j] + c * x
    return out


def vec_lincomb(coeffs: Sequence, vecs: Sequence[Vector], length: int) -> Vector:
    out = [ZERO] * length
    for c, v in zip(coeffs, vecs):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] = out[i] + c * x
    return out


def outer(u: Vector, w: Vector) -> Matrix:
    """The rank-one map ``z -> w(z) u`` (column ``u`` times row ``w``)."""
    return [[x * y for y in w] for x in u]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return sub(matmul(a, b), matmul(b, a))


def trace(a: Matrix):
    s = ZERO
    for i in range(len(a)):
        s = s + a[i][i]
    return s


def is_zero(a) -> bool:
    if a and isinstance(a[0], list):
        return not any(x for row in a for x in row)
    return not any(a)


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return shape(a) == shape(b) and all(
        x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def is_antisymmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == -a[j][i] for i in range(n) for j in range(i, n))


def flatten(a: Matrix) -> Vector:
    return [x for row in a for x in row]


def unflatten(v: Vector, nrows: int, ncols: int) -> Matrix:
    return [list(v[i * ncols:(i + 1) * ncols]) for i in range(nrows)]


# -- elimination -----------------------------------------------------------

def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (copy) and pivot columns."""
    rows = [[as_scalar(x) for x in r] for r in m]
    ncols = shape(m)[1]
    pivots = kernels.row_reduce(rows, ncols)
    return rows[: len(pivots)], pivots


def rank(m: Matrix) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def nullspace(m: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of ``{x : m x = 0}``, one basis vector per free column."""
    ncols = shape(m)[1] if m else ncols
    if ncols is None:
        raise ValueError("empty matrix needs an explicit column count")
    if not m:
        return [unit(ncols, j) for j in range(ncols)]
    red, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(v)
    return basis


def solve(m: Matrix, rhs: Vector) -> Vector | None:
    """One solution of ``m x = rhs`` (free variables zero), or None."""
    nrows, ncols = shape(m)
    aug = [list(row) + [as_scalar(b)] for row, b in zip(m, rhs)]
    red, pivots = rref(aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + unit(n, i) for i, row in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


# -- spans -----------------------------------------------------------------

def independent_subset(vectors: Sequence[Vector]) -> list[int]:
    """Indices of the first maximal linearly independent subsequence."""
    if not vectors:
        return []
    # pivots of the column matrix pick out the independent columns
    cols = transpose([list(v) for v in vectors])
    return rref(cols)[1]


def span_basis(vectors: Sequence[Vector]) -> list[Vector]:
    """Canonical (reduced echelon) basis of the span."""
    if not vectors:
        return []
    return rref([list(v) for v in vectors])[0]


def span_rank(vectors: Sequence[Vector]) -> int:
    return len(span_basis(vectors))


def coordinates(basis: Sequence[Vector], v: Vector) -> Vector | None:
    """Coefficients ``c`` with ``sum c_i basis_i == v`` (basis independent)."""
    if not basis:
        return [] if not any(v) else None
    return solve(transpose([list(b) for b in basis]), list(v))


def same_span(u: Sequence[Vector], w: Sequence[Vector]) -> bool:
    bu, bw = span_basis(u), span_basis(w)
    return len(bu) == len(bw) and all(
        x == y for ru, rw in zip(bu, bw) for x, y in zip(ru, rw)
    )


def contains_span(big: Sequence[Vector], small: Sequence[Vector]) -> bool:
    return span_rank(list(big) + list(small)) == span_rank(big)


# -- symplectic spaces -----------------------------------------------------

def standard_omega(n: int) -> Matrix:
    """``[[0, -I], [I, 0]]`` of size 2n."""
    i_n = identity(n)
    return block_matrix([[None, neg(i_n)], [i_n, None]], [n, n], [n, n])


@dataclass(frozen=True, eq=False)
class SympSpace:
    """A vector space of dimension 2n with the symplectic form ``omega``.

    ``omega[i][j]`` is Omega(e_i, e_j), so Omega(X, Y) = X^T omega Y.
    """

    omega: Matrix
    dim: int = field(init=False)

    def __post_init__(self):
        omega = mat(self.omega)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "dim", len(omega))
        if self.dim == 0 or self.dim % 2 or any(len(r) != self.dim for r in omega):
            raise DimensionMismatch("omega must be a square matrix of even positive size")
        if not is_antisymmetric(omega):
            raise ValueError("omega is not antisymmetric")
        if rank(omega) != self.dim:
            raise ValueError("omega is degenerate")

    @property
    def n(self) -> int:
        return self.dim // 2

    @cached_property
    def omega_inv(self) -> Matrix:
        return inverse(self.omega)

    def form(self, x: Vector, y: Vector):
        return dot(x, mat_vec(self.omega, y))

    def flat(self, x: Vector) -> Vector:
        """The covector ``Omega(x, .)`` as a row."""
        return vec_mat(x, self.omega)

    def __eq__(self, other) -> bool:
        return isinstance(other, SympSpace) and mat_equal(self.omega, other.omega)

    def __hash__(self) -> int:
        return hash(tuple(map(tuple, self.omega)))


def standard_symplectic_space(n: int) -> SympSpace:
    if n < 1:
        raise ValueError("n must be at least 1")
    return SympSpace(standard_omega(n))


def direct_sum(s1: SympSpace, s2: SympSpace) -> SympSpace:
    return SympSpace(block_diag(s1.omega, s2.omega))


def _check_dim(space: SympSpace, a: Matrix) -> None:
    if shape(a) != (space.dim, space.dim):
        raise DimensionMismatch(
            f"expected a {space.dim}x{space.dim} matrix, got {shape(a)}"
        )


def is_inf_symplectic(space: SympSpace, a: Matrix) -> bool:
    """``A^T Omega + Omega A == 0``, i.e. Omega A is symmetric."""
    _check_dim(space, a)
    return is_symmetric(matmul(space.omega, a))


def is_antisymplectic_symmetric(space: SympSpace, b: Matrix) -> bool:
    """``Omega(X, BY) == Omega(BX, Y)``, i.e. Omega B is antisymmetric."""
    _check_dim(space, b)
    return is_antisymmetric(matmul(space.omega, b))


def _sym_basis(dim: int, antisym: bool) -> list[Matrix]:
    out = []
    for i in range(dim):
        for j in range(i, dim):
            if antisym and i == j:
                continue
            m = zeros(dim)
            m[i][j] = ONE
            m[j][i] = -ONE if antisym else ONE
            out.append(m)
    return out


def sp_basis(space: SympSpace) -> list[Matrix]:
    """Basis of the symplectic algebra: ``Omega^{-1} S`` for symmetric S."""
    return [matmul(space.omega_inv, s) for s in _sym_basis(space.dim, False)]


def antisymplectic_basis(space: SympSpace) -> list[Matrix]:
    """Basis of ``{B : Omega B antisymmetric}``, dimension n(2n-1)."""
    return [matmul(space.omega_inv, s) for s in _sym_basis(space.dim, True)]


# -- bilinear forms --------------------------------------------------------

SYMMETRIC = "symmetric"
ANTISYMMETRIC = "antisymmetric"
NONE = "none"


@dataclass(frozen=True, eq=False)
class BilinearForm:
    matrix: Matrix
    symmetry: str = NONE

    def __post_init__(self):
        m = mat(self.matrix)
        object.__setattr__(self, "matrix", m)
        if self.symmetry == SYMMETRIC and not is_symmetric(m):
            raise ValueError("matrix is not symmetric")
        if self.symmetry == ANTISYMMETRIC and not is_antisymmetric(m):
            raise ValueError("matrix is not antisymmetric")
        if self.symmetry not in (SYMMETRIC, ANTISYMMETRIC, NONE):
            raise ValueError(f"unknown symmetry flag {self.symmetry!r}")

    @classmethod
    def detect(cls, m: Matrix) -> BilinearForm:
        m = mat(m)
        if is_symmetric(m):
            return cls(m, SYMMETRIC)
        if is_antisymmetric(m):
            return cls(m, ANTISYMMETRIC)
        return cls(m, NONE)

    def __call__(self, x: Vector, y: Vector):
        return dot(x, mat_vec(self.matrix, y))

    def __eq__(self, other) -> bool:
        other_m = other.matrix if isinstance(other, BilinearForm) else other
        return mat_equal(self.matrix, other_m)

    __hash__ = None


def congruence_diagonal(m: Matrix) -> list[Scalar]:
    """Diagonal of ``P^T M P`` for some invertible P (M symmetric).

    Symmetric Gaussian elimination; a zero diagonal with a nonzero entry in
    its row is first fixed by adding the partner row/column (the hyperbolic
    block trick), which makes the pivot ``2 m_ij`` or ``m_ii + 2 m_ij + m_jj``.
    """
    a = [list(row) for row in m]
    n = len(a)
    diag = []
    active = list(range(n))
    while active:
        piv = next((i for i in active if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in active for j in active
                         if i != j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + e_j : row and column operation
            for k in range(n):
                a[i][k] = a[i][k] + a[j][k]
            for k in range(n):
                a[k][i] = a[k][i] + a[k][j]
            piv = i
        p = a[piv][piv]
        active.remove(piv)
        diag.append(p)
        for i in active:
            f = a[i][piv]
            if not f:
                continue
            f = f / p
            for k in range(n):
                a[i][k] = a[i][k] - f * a[piv][k]
            for k in range(n):
                a[k][i] = a[k][i] - f * a[k][piv]
    return diag


def signature(form) -> tuple[int, int]:
    """``(p, q)`` = numbers of positive and negative squares."""
    m = form.matrix if isinstance(form, BilinearForm) else form
    if not is_symmetric(m):
        raise ValueError("signature needs a symmetric form")
    diag = congruence_diagonal(m)
    signs = [sign(x) for x in diag]
    return signs.count(1), signs.count(-1)


# -- subspaces -------------------------------------------------------------

@dataclass
class SubspaceInfo:
    basis: list[Vector]
    symplectic_orthogonal: list[Vector]
    is_isotropic: bool
    is_lagrangian: bool


def symplectic_orthogonal(space: SympSpace, vectors: Sequence[Vector]) -> list[Vector]:
    """Basis of ``{Y : Omega(u, Y) = 0 for all u}``."""
    if not vectors:
        return [unit(space.dim, j) for j in range(space.dim)]
    rows = [space.flat(list(map(as_scalar, u))) for u in vectors]
    return nullspace(rows)


def subspace_ops(space: SympSpace, vectors: Sequence[Vector]) -> SubspaceInfo:
    vectors = [[as_scalar(x) for x in v] for v in vectors]
    if any(len(v) != space.dim for v in vectors):
        raise DimensionMismatch("vector length does not match the space")
    basis = span_basis(vectors)
    orth = symplectic_orthogonal(space, basis)
    isotropic = all(not space.form(u, w) for u in basis for w in basis)
    return SubspaceInfo(
        basis=basis,
        symplectic_orthogonal=orth,
        is_isotropic=isotropic,
        is_lagrangian=isotropic and len(basis) == space.n,
    )


def kernel_of(a: Matrix) -> list[Vector]:
    return nullspace(a)


def image_of(a: Matrix) -> list[Vector]:
    return span_basis(transpose(a))


def is_scalar_multiple_of_identity(a: Matrix):
    """Return the scalar c with ``a == c I``, or None."""
    n = len(a)
    c = a[0][0] if n else ZERO
    for i in range(n):
        for j in range(n):
            if a[i][j] != (c if i == j else 0):
                return None
    return c
