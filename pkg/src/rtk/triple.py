"""Symmetric symplectic triples ``g = k + p`` with ``k`` inside End(p).

Coordinates on ``g`` list the ``k_basis`` first, then the basis of ``p``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Mapping, Sequence

from . import linalg as la
from .curvature import CurvatureTensor, ricci_type_curvature, square_scalar
from .errors import InvalidTripleError, NonScalarSquareError, NotAdmissibleError, NotAnIdealError
from .lie import LieAlgebra, killing_rank_signature
from .linalg import Matrix, SympSpace

Pair = tuple[int, int]


@dataclass(frozen=True, eq=False)
class SymmetricTriple:
    space: SympSpace
    k_basis: tuple
    pp_bracket: Mapping[Pair, list]  # [e_i, e_j] in k_basis coordinates, i < j

    def __post_init__(self):
        object.__setattr__(self, "k_basis", tuple(la.mat(k) for k in self.k_basis))
        pp = {}
        for (i, j), coeffs in self.pp_bracket.items():
            coeffs = [la.as_scalar(x) for x in coeffs]
            if i > j:
                i, j, coeffs = j, i, [-x for x in coeffs]
            pp[(i, j)] = coeffs
        for pair in combinations(range(self.space.dim), 2):
            pp.setdefault(pair, [Fraction(0)] * len(self.k_basis))
        object.__setattr__(self, "pp_bracket", pp)

    @property
    def dim_k(self) -> int:
        return len(self.k_basis)

    @property
    def dim_p(self) -> int:
        return self.space.dim

    @property
    def dim(self) -> int:
        return self.dim_k + self.dim_p

    def pp_coeffs(self, i: int, j: int) -> list:
        if i == j:
            return [Fraction(0)] * self.dim_k
        if i < j:
            return self.pp_bracket[(i, j)]
        return [-x for x in self.pp_bracket[(j, i)]]

    def pp_matrix(self, i: int, j: int) -> Matrix:
        """``[e_i, e_j]`` as an endomorphism of p."""
        return la.lincomb(self.pp_coeffs(i, j), self.k_basis, (self.dim_p, self.dim_p))

    def k_element(self, coords: Sequence) -> Matrix:
        return la.lincomb(list(coords), self.k_basis, (self.dim_p, self.dim_p))

    @cached_property
    def kk_structure(self) -> dict:
        """``[k_a, k_b]`` in k_basis coordinates; None where it leaves the span."""
        flat = la.transpose([la.flatten(k) for k in self.k_basis]) if self.k_basis else []
        out = {}
        for a, b in combinations(range(self.dim_k), 2):
            comm = la.flatten(la.commutator(self.k_basis[a], self.k_basis[b]))
            out[(a, b)] = la.solve(flat, comm)
        return out

    @cached_property
    def algebra(self) -> LieAlgebra:
        """Structure constants of g (raises if [k, k] is not inside k)."""
        m, d = self.dim_k, self.dim_p
        dim = m + d
        zero = Fraction(0)
        c = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (a, b), coords in self.kk_structure.items():
            if coords is None:
                raise InvalidTripleError(f"[k_{a}, k_{b}] is not in k")
            for t, x in enumerate(coords):
                c[a][b][t] = x
                c[b][a][t] = -x
        for a, k in enumerate(self.k_basis):
            for j in range(d):
                for t in range(d):
                    x = k[t][j]
                    if x:
                        c[a][m + j][m + t] = x
                        c[m + j][a][m + t] = -x
        for (i, j), coeffs in self.pp_bracket.items():
            for t, x in enumerate(coeffs):
                c[m + i][m + j][t] = x
                c[m + j][m + i][t] = -x
        return LieAlgebra(c)

    def p_vector(self, v: Sequence) -> list:
        """Embed a vector of p into g coordinates."""
        return [Fraction(0)] * self.dim_k + [la.as_scalar(x) for x in v]

    def k_vector(self, coords: Sequence) -> list:
        return [la.as_scalar(x) for x in coords] + [Fraction(0)] * self.dim_p


def triple_from_brackets(space: SympSpace, k_basis: Sequence[Matrix],
                         pp_mats: Mapping[Pair, Matrix]) -> SymmetricTriple:
    """Express the given ``[e_i, e_j]`` endomorphisms in ``k_basis``."""
    k_basis = [la.mat(k) for k in k_basis]
    if la.span_rank([la.flatten(k) for k in k_basis]) != len(k_basis):
        raise InvalidTripleError("k_basis is linearly dependent")
    flat = la.transpose([la.flatten(k) for k in k_basis]) if k_basis else []
    pp = {}
    for pair, mtx in pp_mats.items():
        v = la.flatten(la.mat(mtx))
        if not k_basis:
            if any(v):
                raise InvalidTripleError(f"bracket {pair} is nonzero but k is trivial")
            pp[pair] = []
            continue
        coords = la.solve(flat, v)
        if coords is None:
            raise InvalidTripleError(f"bracket {pair} is not in span(k_basis)")
        pp[pair] = coords
    return SymmetricTriple(space, tuple(k_basis), pp)


def build_triple_from_A(space: SympSpace, a: Matrix) -> SymmetricTriple:
    """The transvection algebra of the Ricci-type curvature of ``A``:
    ``[X, Y] = -R(X, Y)``, ``[C, X] = CX``, ``[C, D] = CD - DC``."""
    a = la.mat(a)
    if not la.is_inf_symplectic(space, a):
        raise NotAdmissibleError("A is not infinitesimally symplectic")
    if square_scalar(a) is None:
        raise NonScalarSquareError("A^2 is not a multiple of the identity; "
                                   "no Ricci-type symmetric triple exists")
    R = ricci_type_curvature(space, a)
    pairs = list(R.values)
    chosen = la.independent_subset([la.flatten(R.values[p]) for p in pairs])
    k_basis = [R.values[pairs[t]] for t in chosen]
    return triple_from_brackets(space, k_basis, {p: la.neg(m) for p, m in R.values.items()})


# -- validation -------------------------------------------------------------

CHECKS = ("k_independent", "omega_invariant", "pp_spans_k", "closure", "jacobi")


@dataclass
class TripleReport:
    checks: dict = field(default_factory=lambda: {name: [] for name in CHECKS})

    @property
    def ok(self) -> bool:
        return not any(self.checks.values())

    def failed(self) -> list[str]:
        return [name for name in CHECKS if self.checks[name]]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": {name: {"passed": not self.checks[name],
                              "failures": list(self.checks[name])}
                       for name in CHECKS},
        }


def validate_triple(T: SymmetricTriple, jacobi_limit: int = 20) -> TripleReport:
    rep = TripleReport()
    S = T.space
    flat = [la.flatten(k) for k in T.k_basis]
    if la.span_rank(flat) != T.dim_k:
        rep.checks["k_independent"].append("k_basis is linearly dependent")
    for a, k in enumerate(T.k_basis):
        if la.shape(k) != (S.dim, S.dim):
            rep.checks["omega_invariant"].append(f"k_{a} has the wrong shape")
        elif not la.is_inf_symplectic(S, k):
            rep.checks["omega_invariant"].append(f"k_{a} does not preserve Omega")
    if any(len(c) != T.dim_k for c in T.pp_bracket.values()):
        rep.checks["pp_spans_k"].append("bracket coefficient vector of wrong length")
    elif la.span_rank(list(T.pp_bracket.values())) != T.dim_k:
        rep.checks["pp_spans_k"].append("[p, p] is a proper subspace of k")
    for (a, b), coords in T.kk_structure.items():
        if coords is None:
            rep.checks["closure"].append(f"[k_{a}, k_{b}] not in k")
    if rep.checks["closure"] or rep.checks["k_independent"]:
        rep.checks["jacobi"].append("not evaluated: k is not a subalgebra with this basis")
    else:
        for i, j, k in T.algebra.jacobi_failures(jacobi_limit):
            rep.checks["jacobi"].append(f"Jacobi fails on basis triple ({i}, {j}, {k})")
    return rep


def curvature_of_triple(T: SymmetricTriple) -> CurvatureTensor:
    """``R(X, Y)Z = -[[X, Y], Z]`` read off the bracket tables."""
    return CurvatureTensor(
        T.space, {(i, j): la.neg(T.pp_matrix(i, j)) for (i, j) in T.pp_bracket}
    )


# -- k described through A ---------------------------------------------------

def k_from_symmetrized(space: SympSpace, a: Matrix) -> list[Matrix]:
    """Basis of ``{AB + BA : Omega B antisymmetric}``."""
    a = la.mat(a)
    if not la.is_inf_symplectic(space, a):
        raise NotAdmissibleError("A is not infinitesimally symplectic")
    gens = [la.add(la.matmul(a, b), la.matmul(b, a)) for b in la.antisymplectic_basis(space)]
    chosen = la.independent_subset([la.flatten(g) for g in gens])
    return [gens[t] for t in chosen]


k_from_lemma = k_from_symmetrized


def commutant_sp(space: SympSpace, a: Matrix) -> list[Matrix]:
    """Basis of ``{C in sp(Omega) : CA = AC}``."""
    a = la.mat(a)
    if not la.is_inf_symplectic(space, a):
        raise NotAdmissibleError("A is not infinitesimally symplectic")
    spb = la.sp_basis(space)
    cols = la.transpose([la.flatten(la.commutator(c, a)) for c in spb])
    return [la.lincomb(v, spb) for v in la.nullspace(cols, len(spb))]


def k_span_equal(mats1: Sequence[Matrix], mats2: Sequence[Matrix]) -> bool:
    return la.same_span([la.flatten(m) for m in mats1], [la.flatten(m) for m in mats2])


# -- diagnostics -------------------------------------------------------------

@dataclass
class LieDiagnostics:
    derived_series_dims: list
    lower_central_dims: list | None
    killing_rank: int
    killing_signature: tuple
    quotient_killing_rank: int | None = None
    quotient_killing_signature: tuple | None = None

    @property
    def solvable(self) -> bool:
        return self.derived_series_dims[-1] == 0

    @property
    def perfect(self) -> bool:
        return len(self.derived_series_dims) == 1

    def to_json(self) -> dict:
        return {
            "derived_series_dims": list(self.derived_series_dims),
            "lower_central_dims": (None if self.lower_central_dims is None
                                   else list(self.lower_central_dims)),
            "killing_rank": self.killing_rank,
            "killing_signature": list(self.killing_signature),
            "quotient_killing_rank": self.quotient_killing_rank,
            "quotient_killing_signature": (None if self.quotient_killing_signature is None
                                           else list(self.quotient_killing_signature)),
            "solvable": self.solvable,
        }


def lie_diagnostics(T: SymmetricTriple, ideal_basis: Sequence | None = None) -> LieDiagnostics:
    g = T.algebra
    derived = [len(s) for s in g.derived_series()]
    krank, ksig = killing_rank_signature(g)
    diag = LieDiagnostics(derived, None, krank, ksig)
    if ideal_basis is not None:
        ideal = [[la.as_scalar(x) for x in v] for v in ideal_basis]
        if not g.is_ideal(ideal):
            raise NotAnIdealError("ideal_basis does not span an ideal of g")
        diag.lower_central_dims = [len(s) for s in g.lower_central_series(ideal)]
        qrank, qsig = killing_rank_signature(g.quotient(ideal))
        diag.quotient_killing_rank = qrank
        diag.quotient_killing_signature = qsig
    return diag


def nilradical_candidate(T: SymmetricTriple, a: Matrix) -> list:
    """For nilpotent A (A^2 = 0): ``{C in k : CA = 0} + Ker A`` in g coordinates.

    These are the elements acting trivially on Image A together with the
    kernel of A, the ideal singled out by the block description."""
    a = la.mat(a)
    # C = sum x_t k_t with C A = 0
    cols = la.transpose([la.flatten(la.matmul(k, a)) for k in T.k_basis]) if T.k_basis else []
    kpart = la.nullspace(cols, T.dim_k) if T.k_basis else []
    ppart = la.nullspace(a)
    return [T.k_vector(v) for v in kpart] + [T.p_vector(v) for v in ppart]
