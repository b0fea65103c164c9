"""Classification of Ricci-type symmetric triples, the product check and the
low-dimensional catalog."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg as la
from .curvature import (cross_block, product_curvature, ricci_type_curvature,
                        square_scalar, weyl_part)
from .errors import InvalidTripleError, NonScalarSquareError, NotRicciTypeError
from .linalg import Matrix, SympSpace
from .models import ModelParams, build_model
from .scalars import QuadExt
from .triple import (SymmetricTriple, curvature_of_triple, lie_diagnostics, nilradical_candidate,
                     validate_triple)


def compute_lambda(a: Matrix) -> Fraction:
    """The scalar with ``A^2 = lambda Id``; raises if A^2 is not scalar."""
    lam = square_scalar(la.mat(a))
    if lam is None:
        raise NonScalarSquareError("A^2 is not a multiple of the identity")
    return lam


def sl_name(n: int) -> str:
    return f"SL({n + 1},R)/GL({n},R)"


def su_name(p: int, q: int) -> str:
    n = p + q
    g = f"SU({p + 1})" if q == 0 else f"SU({p + 1},{q})"
    k = f"U({n})" if p == 0 or q == 0 else f"U({p},{q})"
    return f"{g}/{k}"


def nilpotent_name(r: int, p: int, q: int) -> str:
    return f"lambda=0, rank {r}, signature ({p},{q})"


@dataclass
class ClassificationReport:
    n: int
    lam: Fraction
    lambda_sign: str
    rank_A: int
    signature: tuple
    model_name: str
    family: str
    structure: str
    radical_class: str
    compact: bool
    levi_factor: str | None = None
    b: object = None
    derived_series_dims: list = field(default_factory=list)
    radical_lower_central_dims: list | None = None
    killing_rank: int = 0
    killing_signature: tuple = (0, 0)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lambda": str(self.lam),
            "lambda_sign": self.lambda_sign,
            "rank_A": self.rank_A,
            "signature": list(self.signature),
            "model_name": self.model_name,
            "family": self.family,
            "structure": self.structure,
            "radical_class": self.radical_class,
            "compact": self.compact,
            "levi_factor": self.levi_factor,
            "b": None if self.b is None else str(self.b),
            "derived_series_dims": list(self.derived_series_dims),
            "radical_lower_central_dims": (None if self.radical_lower_central_dims is None
                                           else list(self.radical_lower_central_dims)),
            "killing_rank": self.killing_rank,
            "killing_signature": list(self.killing_signature),
        }


def _eigenspace_dim(a: Matrix, ev) -> int:
    shifted = [[x - (ev if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(a)]
    return len(a) - la.rank(shifted)


def classify_triple(T: SymmetricTriple) -> ClassificationReport:
    rep = validate_triple(T)
    if not rep.ok:
        raise InvalidTripleError(f"triple fails checks: {', '.join(rep.failed())}")
    dec = weyl_part(curvature_of_triple(T))
    if not dec.is_ricci_type:
        raise NotRicciTypeError("curvature has a nonzero W component")
    S = T.space
    n = S.n
    A = dec.ricci_data.A
    lam = compute_lambda(A)
    rank_a = la.rank(A)
    diag = lie_diagnostics(T)
    common = dict(n=n, lam=lam, rank_A=rank_a, derived_series_dims=diag.derived_series_dims,
                  killing_rank=diag.killing_rank, killing_signature=diag.killing_signature)
    if lam > 0:
        a = QuadExt.sqrt_of(lam)
        sig = (_eigenspace_dim(A, a), _eigenspace_dim(A, -a))
        structure = "semisimple" if diag.killing_rank == T.dim else "mixed"
        return ClassificationReport(
            lambda_sign="positive", signature=sig, model_name=sl_name(n), family="sl",
            structure=structure, radical_class="none", compact=False, b=a, **common)
    if lam < 0:
        b = -QuadExt.sqrt_of(-lam)
        J = [[x / b for x in row] for row in A]
        p2, q2 = la.signature(la.matmul(S.omega, J))
        p, q = p2 // 2, q2 // 2
        structure = "semisimple" if diag.killing_rank == T.dim else "mixed"
        return ClassificationReport(
            lambda_sign="negative", signature=(p, q), model_name=su_name(p, q), family="su",
            structure=structure, radical_class="none", compact=q == 0, b=b, **common)
    p, q = la.signature(dec.ricci_data.r)
    ideal = nilradical_candidate(T, A)
    rdiag = lie_diagnostics(T, ideal)
    lc = rdiag.lower_central_dims
    if lc[-1] != 0:
        radical_class = "not_nilpotent"
    elif len(lc) <= 2:
        radical_class = "abelian"
    elif len(lc) == 3:
        radical_class = "two_step"
    else:
        radical_class = f"{len(lc) - 1}_step"
    return ClassificationReport(
        lambda_sign="zero", signature=(p, q), model_name=nilpotent_name(rank_a, p, q),
        family="nilpotent", structure="solvable" if diag.solvable else "mixed",
        radical_class=radical_class, compact=False,
        levi_factor=f"so({p},{q + 1})" if rank_a > 1 else None,
        radical_lower_central_dims=lc, **common)


# -- products ----------------------------------------------------------------

@dataclass
class ProductReport:
    W_is_zero: bool
    A1_is_zero: bool
    A2_is_zero: bool
    cross_12: dict
    cross_21: dict
    cross_matches_formula: bool

    @property
    def flat(self) -> bool:
        return self.A1_is_zero and self.A2_is_zero

    @property
    def equivalence_holds(self) -> bool:
        return self.W_is_zero == self.flat

    def to_json(self) -> dict:
        from .io import matrix_to_json
        return {
            "W_is_zero": self.W_is_zero,
            "A1_is_zero": self.A1_is_zero,
            "A2_is_zero": self.A2_is_zero,
            "flat": self.flat,
            "equivalence_holds": self.equivalence_holds,
            "cross_matches_formula": self.cross_matches_formula,
            "cross_12": {f"{i},{j}": matrix_to_json(m) for (i, j), m in self.cross_12.items()},
            "cross_21": {f"{i},{j}": matrix_to_json(m) for (i, j), m in self.cross_21.items()},
        }


def cross_formula(s_pairs: SympSpace, s_act: SympSpace, a_act: Matrix, n: int) -> dict:
    """``-(1/(n+1)) w(X, Y) A Z`` on basis pairs of ``s_pairs``, Z in ``s_act``."""
    c = Fraction(-1, n + 1)
    return {(i, j): la.scale(c * s_pairs.omega[i][j], a_act)
            for i, j in combinations(range(s_pairs.dim), 2)}


def product_flatness_check(a1: Matrix, a2: Matrix, s1: SympSpace | None = None,
                           s2: SympSpace | None = None) -> ProductReport:
    a1, a2 = la.mat(a1), la.mat(a2)
    s1 = s1 or la.standard_symplectic_space(len(a1) // 2)
    s2 = s2 or la.standard_symplectic_space(len(a2) // 2)
    R = product_curvature(ricci_type_curvature(s1, a1), ricci_type_curvature(s2, a2))
    W = weyl_part(R).W
    d1, d2 = s1.dim, s2.dim
    n = (d1 + d2) // 2
    c12 = cross_block(W, d1)
    # pairs of s2 acting on s1: rows/cols of the first summand
    c21 = {(i, j): [row[:d1] for row in W(d1 + i, d1 + j)]
           for i, j in combinations(range(d2), 2)}
    f12 = cross_formula(s1, s2, a2, n)
    f21 = cross_formula(s2, s1, a1, n)
    match = all(
        la.mat_equal(c12[p][d1:], f12[p]) and la.is_zero(c12[p][:d1]) for p in c12
    ) and all(
        la.mat_equal(c21[p][:d1], f21[p]) and la.is_zero(c21[p][d1:]) for p in c21
    )
    return ProductReport(W.is_zero(), la.is_zero(a1), la.is_zero(a2), c12, c21, match)


# -- catalog -----------------------------------------------------------------

@dataclass
class CatalogEntry:
    label: str
    params: ModelParams
    triple: SymmetricTriple
    report: ClassificationReport
    valid: bool

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "params": self.params.to_json(),
            "valid": self.valid,
            "dim_g": self.triple.dim,
            "report": self.report.to_json(),
        }


def catalog_params(n: int) -> list[tuple[str, ModelParams]]:
    out = [(sl_name(n), ModelParams("sl", n))]
    for p in range(n + 1):
        out.append((su_name(p, n - p), ModelParams("su", n, p=p, q=n - p)))
    for r in range(1, n + 1):
        for p in range(r + 1):
            out.append((f"lambda=0, rank {r}, p={p}",
                        ModelParams("nilpotent", n, p=p, q=r - p, rank=r)))
    return out


def dim_catalog(n: int) -> list[CatalogEntry]:
    """Every Ricci-type model of dimension 2n, each built, validated and classified."""
    entries = []
    for label, params in catalog_params(n):
        T = build_model(params).triple
        entries.append(CatalogEntry(label, params, T, classify_triple(T), validate_triple(T).ok))
    return entries


def dim4_catalog() -> list[CatalogEntry]:
    return dim_catalog(2)
