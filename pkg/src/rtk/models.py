"""The three model families of Ricci-type symmetric triples.

* ``sl``: p = V + V*, A = a(P+ - P-), embedded in trace-free (n+1)x(n+1)
  real matrices.
* ``su``: p = C^n with a Hermitian form of signature (p, q), A = bJ,
  embedded in su(p+1, q) (complex matrices realified).
* ``nilpotent``: p = Z + Z* + V, A maps Z* onto Z; brackets come from the
  generic builder and the radical / Levi data are attached.

Complex matrices are handled as pairs ``(P, Q)`` meaning ``P + iQ`` and
realified as ``[[P, -Q], [Q, P]]`` on coordinates ``(Re, Im)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg as la
from .curvature import kappa, ricci_type_curvature
from .linalg import Matrix, SympSpace
from .scalars import QuadExt, as_rational
from .triple import (SymmetricTriple, build_triple_from_A, curvature_of_triple, k_span_equal,
                     triple_from_brackets)

FAMILIES = ("sl", "su", "nilpotent")
_ALIASES = {
    "positivelambda": "sl", "positive": "sl", "sl": "sl",
    "negativelambda": "su", "negative": "su", "su": "su",
    "zerolambda": "nilpotent", "zero": "nilpotent", "nilpotent": "nilpotent",
}


@dataclass(frozen=True)
class ModelParams:
    family: str
    n: int
    s: Fraction = Fraction(1)
    p: int | None = None
    q: int | None = None
    rank: int | None = None

    def __post_init__(self):
        fam = _ALIASES.get(str(self.family).lower())
        if fam is None:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "s", as_rational(self.s))
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError("n must be an integer >= 2")
        if fam in ("sl", "su") and self.s == 0:
            raise ValueError("s must be nonzero")
        if fam == "su":
            if self.p is None or self.q is None or self.p < 0 or self.q < 0 \
                    or self.p + self.q != self.n:
                raise ValueError("su family needs p, q >= 0 with p + q = n")
        if fam == "nilpotent":
            if self.rank is None or not 1 <= self.rank <= self.n:
                raise ValueError("nilpotent family needs 1 <= rank <= n")
            if self.p is None and self.q is None:
                raise ValueError("nilpotent family needs p (and optionally q)")
            p = self.p if self.p is not None else self.rank - self.q
            q = self.q if self.q is not None else self.rank - p
            if p < 0 or q < 0 or p + q != self.rank:
                raise ValueError("nilpotent family needs p, q >= 0 with p + q = rank")
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)

    @property
    def a(self) -> Fraction:
        """Eigenvalue scale of the sl family: a = (n+1) s^2."""
        return (self.n + 1) * self.s * self.s

    @property
    def b(self) -> Fraction:
        """Complex-structure scale of the su family: b = -(2n+2) s^2."""
        return -(2 * self.n + 2) * self.s * self.s

    def to_json(self) -> dict:
        out = {"family": self.family, "n": self.n}
        if self.family in ("sl", "su"):
            out["s"] = str(self.s)
        if self.family in ("su", "nilpotent"):
            out["p"] = self.p
            out["q"] = self.q
        if self.family == "nilpotent":
            out["rank"] = self.rank
        return out

    @classmethod
    def from_json(cls, obj: dict) -> ModelParams:
        return cls(
            family=obj["family"],
            n=int(obj["n"]),
            s=Fraction(obj.get("s", "1")),
            p=None if obj.get("p") is None else int(obj["p"]),
            q=None if obj.get("q") is None else int(obj["q"]),
            rank=None if obj.get("rank") is None else int(obj["rank"]),
        )


@dataclass
class Embedding:
    """Linear map from a subspace of g (spanned by ``domain_basis``, given in
    g coordinates) into square matrices.

    ``kind`` names the target algebra used for the membership check:
    ``sl`` (trace zero), ``su`` (realified, skew-Hermitian for ``form`` and
    complex trace zero) or ``so`` (``M^T form + form M = 0``).
    """

    target_dim: int
    domain_basis: list
    images: list
    kind: str
    form: Matrix | None = None

    def __call__(self, coords: Sequence) -> Matrix:
        return la.lincomb(list(coords), self.images, (self.target_dim, self.target_dim))


@dataclass
class Model:
    params: ModelParams
    triple: SymmetricTriple
    A: Matrix
    embedding: Embedding | None = None
    radical_basis: list | None = None
    levi_map: Embedding | None = None
    notes: dict = field(default_factory=dict)


# -- complex helpers -------------------------------------------------------

def realify(p: Matrix, q: Matrix) -> Matrix:
    return la.block_matrix([[p, la.neg(q)], [q, p]], [len(p), len(p)], [len(p[0]), len(p[0])])


def complex_parts(m: Matrix) -> tuple[Matrix, Matrix]:
    """Inverse of ``realify`` (does not check the block structure)."""
    h = len(m) // 2
    return la.submatrix(m, range(h), range(h)), la.submatrix(m, range(h, 2 * h), range(h))


def is_complex_linear(m: Matrix) -> bool:
    h = len(m) // 2
    j = realify(la.zeros(h), la.identity(h))
    return la.mat_equal(la.matmul(j, m), la.matmul(m, j))


# -- positive family -------------------------------------------------------

def _sl_k_element(c: Matrix) -> Matrix:
    """``diag(C, -C^T)`` acting on V + V*."""
    return la.block_diag(c, la.neg(la.transpose(c)))


def build_positive_model(n: int, s=1) -> Model:
    params = ModelParams("sl", n, s)
    space = la.standard_symplectic_space(n)
    a = params.a
    k = kappa(space)
    A = la.block_diag(la.scale(a, la.identity(n)), la.scale(-a, la.identity(n)))
    gl_basis = [la.elementary(n, i, j) for i in range(n) for j in range(n)]
    k_basis = [_sl_k_element(c) for c in gl_basis]

    def split(v):
        return v[:n], v[n:]

    pp = {}
    for i, j in combinations(range(2 * n), 2):
        x, xi = split(la.unit(2 * n, i))
        x2, xi2 = split(la.unit(2 * n, j))
        # [(0,X,xi),(0,X',xi')] = 2ka((<X,xi'> - <X',xi>) I + X (x) xi' - X' (x) xi)
        c = la.scale(la.dot(x, xi2) - la.dot(x2, xi), la.identity(n))
        c = la.add(c, la.sub(la.outer(x, xi2), la.outer(x2, xi)))
        pp[(i, j)] = _sl_k_element(la.scale(2 * k * a, c))
    T = triple_from_brackets(space, k_basis, pp)

    s_ = params.s
    images = []
    for c in gl_basis:
        tr = la.trace(c)
        top = la.sub(c, la.scale(2 * k * tr, la.identity(n)))
        images.append(la.block_matrix([[top, None], [None, [[-2 * k * tr]]]], [n, 1], [n, 1]))
    for i in range(2 * n):
        x, xi = split(la.unit(2 * n, i))
        col = [[s_ * t] for t in x]
        row = [[s_ * t for t in xi]]
        images.append(la.block_matrix([[None, col], [row, None]], [n, 1], [n, 1]))
    emb = Embedding(n + 1, [la.unit(T.dim, t) for t in range(T.dim)], images, "sl")
    return Model(params, T, A, embedding=emb)


# -- negative family -------------------------------------------------------

def hermitian_signs(p: int, q: int) -> list[int]:
    return [1] * p + [-1] * q


def complex_structure(n: int) -> Matrix:
    """Multiplication by i on coordinates (Re, Im)."""
    return realify(la.zeros(n), la.identity(n))


def hermitian_omega(p: int, q: int) -> Matrix:
    """``Omega(v, w) = Im <v, w>`` with ``<v, w> = sum eps_i conj(v_i) w_i``."""
    n = p + q
    d = [[Fraction(e) if i == j else Fraction(0) for j, e in enumerate(hermitian_signs(p, q))]
         for i in range(n)]
    return la.block_matrix([[None, d], [la.neg(d), None]], [n, n], [n, n])


def u_pq_basis(p: int, q: int) -> list[tuple[Matrix, Matrix]]:
    """Real basis of u(p, q) as ``(P, Q)`` pairs, dimension n^2."""
    n = p + q
    eps = hermitian_signs(p, q)
    out = []
    for i in range(n):
        out.append((la.zeros(n), la.elementary(n, i, i)))
    for i, j in combinations(range(n), 2):
        e = eps[i] * eps[j]
        re = la.elementary(n, i, j)
        re[j][i] = Fraction(-e)
        im = la.elementary(n, i, j)
        im[j][i] = Fraction(e)
        out.append((re, la.zeros(n)))
        out.append((la.zeros(n), im))
    return out


def build_negative_model(n: int, p: int, q: int, s=1) -> Model:
    params = ModelParams("su", n, s, p=p, q=q)
    space = SympSpace(hermitian_omega(p, q))
    J = complex_structure(n)
    b = params.b
    k = kappa(space)
    A = la.scale(b, J)
    cbasis = u_pq_basis(p, q)
    k_basis = [realify(P, Q) for P, Q in cbasis]
    omega_j = la.matmul(space.omega, J)

    def herm_map(x, x2):
        # z -> <x2, z> x  =  Omega(x2, Jz) x + Omega(x2, z) Jx
        return la.add(la.outer(x, la.vec_mat(x2, omega_j)),
                      la.outer(la.mat_vec(J, x), space.flat(x2)))

    pp = {}
    for i, j in combinations(range(2 * n), 2):
        x, x2 = la.unit(2 * n, i), la.unit(2 * n, j)
        c = la.sub(herm_map(x, x2), herm_map(x2, x))
        c = la.sub(c, la.scale(2 * space.form(x, x2), J))
        pp[(i, j)] = la.scale(k * b, c)
    T = triple_from_brackets(space, k_basis, pp)

    eps = hermitian_signs(p, q)
    s_ = params.s
    images = []
    for P, Q in cbasis:
        tr_re, tr_im = la.trace(P), la.trace(Q)
        top_p = la.sub(P, la.scale(2 * k * tr_re, la.identity(n)))
        top_q = la.sub(Q, la.scale(2 * k * tr_im, la.identity(n)))
        big_p = la.block_matrix([[top_p, None], [None, [[-2 * k * tr_re]]]], [n, 1], [n, 1])
        big_q = la.block_matrix([[top_q, None], [None, [[-2 * k * tr_im]]]], [n, 1], [n, 1])
        images.append(realify(big_p, big_q))
    for t in range(2 * n):
        v = la.unit(2 * n, t)
        re, im = v[:n], v[n:]
        # column s X ; row -conj(s) <X, .> with <X, .>_i = eps_i conj(X_i)
        col_p, col_q = [[s_ * x] for x in re], [[s_ * y] for y in im]
        row_p = [[-s_ * eps[i] * re[i] for i in range(n)]]
        row_q = [[s_ * eps[i] * im[i] for i in range(n)]]
        big_p = la.block_matrix([[None, col_p], [row_p, None]], [n, 1], [n, 1])
        big_q = la.block_matrix([[None, col_q], [row_q, None]], [n, 1], [n, 1])
        images.append(realify(big_p, big_q))
    herm = [[Fraction(e) if i == j else Fraction(0) for j, e in enumerate(eps + [1])]
            for i in range(n + 1)]
    emb = Embedding(2 * (n + 1), [la.unit(T.dim, t) for t in range(T.dim)], images, "su", herm)
    return Model(params, T, A, embedding=emb)


# -- zero family -----------------------------------------------------------

def nilpotent_blocks(n: int, r: int, p: int, q: int):
    """``(omega, A, A', J')`` in the block form on Z + Z* + V."""
    m = 2 * n - 2 * r
    eps = [1] * p + [-1] * q
    a_prime = [[Fraction(eps[i]) if i == j else Fraction(0) for j in range(r)] for i in range(r)]
    j_prime = la.standard_omega(m // 2) if m else []
    sizes = [r, r, m]
    i_r = la.identity(r)
    omega = la.block_matrix(
        [[None, la.neg(i_r), None], [i_r, None, None], [None, None, j_prime or None]],
        sizes, sizes)
    A = la.block_matrix([[None, a_prime, None], [None, None, None], [None, None, None]],
                        sizes, sizes)
    return omega, A, a_prime, j_prime


def nilpotent_k_element(K, L, M, j_prime, r: int, m: int) -> Matrix:
    """``[[K, L, -M^T J'], [0, -K^T, 0], [0, M, 0]]``."""
    sizes = [r, r, m]
    if m:
        top_right = la.neg(la.matmul(la.transpose(M), j_prime))
        grid = [[K, L, top_right], [None, la.neg(la.transpose(K)), None], [None, M, None]]
    else:
        grid = [[K, L, None], [None, la.neg(la.transpose(K)), None], [None, None, None]]
    return la.block_matrix(grid, sizes, sizes)


def so_basis(eps: Sequence[int]) -> list[Matrix]:
    """Basis of ``{K : K^T D + D K = 0}``, D = diag(eps)."""
    r = len(eps)
    out = []
    for i, j in combinations(range(r), 2):
        k = la.elementary(r, i, j)
        k[j][i] = Fraction(-eps[i] * eps[j])
        out.append(k)
    return out


def build_zero_model(n: int, r: int, p: int, q: int | None = None) -> Model:
    q = r - p if q is None else q
    params = ModelParams("nilpotent", n, p=p, q=q, rank=r)
    m = 2 * n - 2 * r
    omega, A, a_prime, j_prime = nilpotent_blocks(n, r, p, q)
    space = SympSpace(omega)
    eps = [1] * p + [-1] * q

    zr, zm = la.zeros(r), (la.zeros(m, r) if m else [])
    k_blocks = [("K", K) for K in so_basis(eps)]
    for i in range(r):
        for j in range(i, r):
            L = la.elementary(r, i, j)
            L[j][i] = Fraction(1)
            k_blocks.append(("L", L))
    for i in range(m):
        for j in range(r):
            M = la.zeros(m, r)
            M[i][j] = Fraction(1)
            k_blocks.append(("M", M))
    k_basis = []
    for kind, blk in k_blocks:
        K = blk if kind == "K" else zr
        L = blk if kind == "L" else zr
        M = blk if kind == "M" else zm
        k_basis.append(nilpotent_k_element(K, L, M, j_prime, r, m))

    generic = build_triple_from_A(space, A)
    if not k_span_equal(k_basis, generic.k_basis):
        raise AssertionError("block description of k disagrees with span R(X, Y)")
    T = triple_from_brackets(space, k_basis,
                             {pair: generic.pp_matrix(*pair) for pair in generic.pp_bracket})

    nk = len(k_basis)
    radical = [T.k_vector(la.unit(nk, t)) for t, (kind, _) in enumerate(k_blocks)
               if kind != "K"]
    radical += [T.p_vector(la.unit(2 * n, t)) for t in list(range(r)) + list(range(2 * r, 2 * n))]

    root = QuadExt.sqrt_of(kappa(space))
    levi_domain, levi_images = [], []
    for t, (kind, blk) in enumerate(k_blocks):
        if kind == "K":
            levi_domain.append(T.k_vector(la.unit(nk, t)))
            levi_images.append(la.block_matrix([[blk, None], [None, None]], [r, 1], [r, 1]))
    for i in range(r):
        v = la.unit(r, i)
        col = [[-root * x] for x in la.mat_vec(a_prime, v)]
        row = [[-root * x for x in v]]
        levi_domain.append(T.p_vector(la.unit(2 * n, r + i)))
        levi_images.append(la.block_matrix([[None, col], [row, None]], [r, 1], [r, 1]))
    form = la.block_diag(a_prime, [[Fraction(-1)]])
    levi = Embedding(r + 1, levi_domain, levi_images, "so", form)
    model = Model(params, T, A, radical_basis=radical, levi_map=levi)
    model.notes["k_blocks"] = [kind for kind, _ in k_blocks]
    return model


def build_model(params: ModelParams) -> Model:
    if params.family == "sl":
        return build_positive_model(params.n, params.s)
    if params.family == "su":
        return build_negative_model(params.n, params.p, params.q, params.s)
    return build_zero_model(params.n, params.rank, params.p, params.q)


# -- verification ----------------------------------------------------------

@dataclass
class EmbeddingReport:
    bracket_failures: list
    injective: bool
    membership_failures: list
    pairs_checked: int

    @property
    def ok(self) -> bool:
        return not self.bracket_failures and self.injective and not self.membership_failures

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "pairs_checked": self.pairs_checked,
            "bracket_failures": [list(p) for p in self.bracket_failures],
            "injective": self.injective,
            "membership_failures": list(self.membership_failures),
        }


def _member(E: Embedding, m: Matrix) -> str | None:
    if E.kind == "sl":
        return None if not la.trace(m) else "trace is nonzero"
    if E.kind == "so":
        g = E.form
        if not la.is_zero(la.add(la.matmul(la.transpose(m), g), la.matmul(g, m))):
            return "does not preserve the quadratic form"
        return None
    if E.kind == "su":
        if not is_complex_linear(m):
            return "not complex linear"
        P, Q = complex_parts(m)
        h = E.form
        if la.trace(P) or la.trace(Q):
            return "complex trace is nonzero"
        # M* H + H M = 0 with M = P + iQ
        re = la.add(la.matmul(la.transpose(P), h), la.matmul(h, P))
        im = la.sub(la.matmul(h, Q), la.matmul(la.transpose(Q), h))
        if not la.is_zero(re) or not la.is_zero(im):
            return "not skew-Hermitian"
        return None
    raise ValueError(f"unknown target kind {E.kind!r}")


def verify_embedding(E: Embedding, T: SymmetricTriple) -> EmbeddingReport:
    """Check ``E([x, y]) == [E(x), E(y)]`` on every pair of domain basis
    vectors, injectivity and membership of every image in the target."""
    g = T.algebra
    basis = [list(v) for v in E.domain_basis]
    dom = la.transpose(basis)
    failures = []
    pairs = 0
    for a, b in combinations(range(len(basis)), 2):
        pairs += 1
        z = g.bracket(basis[a], basis[b])
        coords = la.solve(dom, z)
        if coords is None:
            failures.append((a, b))
            continue
        lhs = E(coords)
        rhs = la.commutator(E.images[a], E.images[b])
        if not la.mat_equal(lhs, rhs):
            failures.append((a, b))
    injective = la.span_rank([la.flatten(m) for m in E.images]) == len(basis) \
        and la.span_rank(basis) == len(basis)
    membership = []
    for t, m in enumerate(E.images):
        why = _member(E, m)
        if why:
            membership.append(f"image {t}: {why}")
    return EmbeddingReport(failures, injective, membership, pairs)


def involution_matrix(E: Embedding) -> Matrix:
    """Conjugation realising the involution (+1 on k, -1 on p) in the target:
    ``diag(1, ..., 1, -1)`` on each real/imaginary copy."""
    if E.kind == "sl":
        return la.block_diag(la.identity(E.target_dim - 1), [[Fraction(-1)]])
    h = E.target_dim // 2
    d = la.block_diag(la.identity(h - 1), [[Fraction(-1)]])
    return la.block_diag(d, d)


def check_involution(E: Embedding, T: SymmetricTriple) -> bool:
    """``E(sigma x) == D E(x) D`` on every basis vector of g."""
    d = involution_matrix(E)
    for t, m in enumerate(E.images):
        sgn = 1 if t < T.dim_k else -1
        if not la.mat_equal(la.scale(sgn, m), la.matmul(d, la.matmul(m, d))):
            return False
    return True


def same_triple(T1: SymmetricTriple, T2: SymmetricTriple) -> bool:
    """Equal spaces, equal k spans and equal brackets ``[e_i, e_j]``."""
    if T1.space != T2.space or not k_span_equal(T1.k_basis, T2.k_basis):
        return False
    return all(la.mat_equal(T1.pp_matrix(i, j), T2.pp_matrix(i, j)) for (i, j) in T1.pp_bracket)


def closed_form_curvature_check(model: Model) -> bool:
    """Model curvature equals E(A) computed from the stated A."""
    return curvature_of_triple(model.triple) == ricci_type_curvature(model.triple.space, model.A)


# -- printed lambda = 0 bracket tables ---------------------------------------

def _printed_pp(u, v, w, u2, v2, w2, a_prime, j_prime, k, r, m):
    """The printed ``[p, p]`` table as (K, L, M) blocks, taken literally:

    K~ = A'(v' v^T - v v'^T),  B = v u'^T - v' u^T,
    L~ = A'B + B^T A' + 2(Tr B + w^T J' w') A',
    M~ = -(A'(v' w^T - v w'^T))^T,
    [(u,v,w),(u',v',w')] = -k [[K~, L~, -M~^T J'], [0, -K~^T, 0], [0, M~, 0]].
    """
    col = lambda x: [[t] for t in x]  # noqa: E731
    row = lambda x: [list(x)]  # noqa: E731
    kt = la.matmul(a_prime, la.sub(la.matmul(col(v2), row(v)), la.matmul(col(v), row(v2))))
    B = la.sub(la.matmul(col(v), row(u2)), la.matmul(col(v2), row(u)))
    wjw = la.dot(w, la.mat_vec(j_prime, w2)) if m else Fraction(0)
    lt = la.add(la.matmul(a_prime, B), la.matmul(la.transpose(B), a_prime))
    lt = la.add(lt, la.scale(2 * (la.trace(B) + wjw), a_prime))
    if m:
        mt = la.neg(la.transpose(la.matmul(
            a_prime, la.sub(la.matmul(col(v2), row(w)), la.matmul(col(v), row(w2))))))
    else:
        mt = []
    return (la.scale(-k, kt), la.scale(-k, lt), la.scale(-k, mt) if m else [])


def printed_table_discrepancies(model: Model) -> dict:
    """Compare the printed lambda = 0 bracket formulas with the Jacobi-checked
    brackets of the model triple.

    Returns ``{"pp": [...], "kk": [...], "kp": [...]}``; each entry names a
    basis pair where the printed formula disagrees with the ground truth.
    """
    params = model.params
    if params.family != "nilpotent":
        raise ValueError("printed tables exist only for the nilpotent family")
    n, r = params.n, params.rank
    m = 2 * n - 2 * r
    T = model.triple
    _, _, a_prime, j_prime = nilpotent_blocks(n, r, params.p, params.q)
    k = kappa(T.space)
    out = {"pp": [], "kk": [], "kp": []}

    def parts(x):
        return x[:r], x[r:2 * r], x[2 * r:]

    def blocks(c):
        K = la.submatrix(c, range(r), range(r))
        L = la.submatrix(c, range(r), range(r, 2 * r))
        M = la.submatrix(c, range(2 * r, 2 * n), range(r, 2 * r)) if m else []
        return K, L, M

    for i, j in combinations(range(2 * n), 2):
        x, y = la.unit(2 * n, i), la.unit(2 * n, j)
        K, L, M = _printed_pp(*parts(x), *parts(y), a_prime, j_prime, k, r, m)
        printed = nilpotent_k_element(K, L, M, j_prime, r, m)
        if not la.mat_equal(printed, T.pp_matrix(i, j)):
            truth = blocks(T.pp_matrix(i, j))
            which = [name for name, a, b in zip("KLM", (K, L, M), truth)
                     if not la.mat_equal(a, b)]
            out["pp"].append({"pair": [i, j], "blocks": which})

    def printed_kk(c1, c2):
        K1, L1, M1 = blocks(c1)
        K2, L2, M2 = blocks(c2)
        tK1, tK2 = la.transpose(K1), la.transpose(K2)
        L = la.sub(la.matmul(K1, L2), la.matmul(L1, tK2))
        L = la.sub(L, la.matmul(K2, L1))
        L = la.add(L, la.matmul(L2, tK1))
        if m:
            L = la.sub(L, la.matmul(la.transpose(M1), la.matmul(j_prime, M2)))
            L = la.add(L, la.matmul(la.transpose(M2), la.matmul(j_prime, M1)))
            M = la.add(la.neg(la.matmul(M1, tK2)), la.matmul(M2, tK1))
        else:
            M = []
        return nilpotent_k_element(la.commutator(K1, K2), L, M, j_prime, r, m)

    for a, b in combinations(range(T.dim_k), 2):
        c1, c2 = T.k_basis[a], T.k_basis[b]
        if not la.mat_equal(printed_kk(c1, c2), la.commutator(c1, c2)):
            out["kk"].append({"pair": [a, b]})

    for a, c in enumerate(T.k_basis):
        K, L, M = blocks(c)
        for t in range(2 * n):
            u, v, w = parts(la.unit(2 * n, t))
            top = [x + y for x, y in zip(la.mat_vec(K, u), la.mat_vec(L, v))]
            if m:
                mjw = la.mat_vec(la.transpose(M), la.mat_vec(j_prime, w))
                top = [x - y for x, y in zip(top, mjw)]
            mid = [-x for x in la.mat_vec(la.transpose(K), v)]
            bot = la.mat_vec(M, v) if m else []
            if top + mid + bot != la.mat_vec(c, la.unit(2 * n, t)):
                out["kp"].append({"pair": [a, t]})
    return out
