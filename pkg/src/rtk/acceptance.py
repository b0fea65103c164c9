"""The acceptance suite, shared by ``rtk selftest`` and the pytest gate.

Every criterion is an exact equality check; the two timed criteria also
carry a wall-clock budget.  ``run_all`` returns one ``CriterionResult`` per
criterion.
"""
from __future__ import annotations

import random
import subprocess
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from . import linalg as la
from .classify import dim4_catalog, product_flatness_check
from .curvature import (curvature_space_basis, random_admissible, random_curvature_tensor, ricci,
                        ricci_type_curvature, square_scalar, weyl_part)
from .errors import NonScalarSquareError
from .lie import killing_rank_signature
from .models import (ModelParams, build_model, build_negative_model, build_positive_model,
                     complex_structure, verify_embedding)
from .triple import build_triple_from_A, lie_diagnostics, validate_triple

SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.name} ({self.seconds:.2f}s) {self.detail}"

    def to_json(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


def _admissible_samples(count: int = 50):
    rng = random.Random(SEED)
    out = []
    for n in (2, 3):
        S = la.standard_symplectic_space(n)
        out.extend((S, random_admissible(S, rng)) for _ in range(count))
    return out


# -- 1, 2 --------------------------------------------------------------------

def trace_consistency() -> tuple[bool, str]:
    bad = 0
    samples = _admissible_samples()
    for S, a in samples:
        r = ricci(ricci_type_curvature(S, a)).matrix
        if not la.mat_equal(r, la.matmul(S.omega, a)):
            bad += 1
    return bad == 0, f"{len(samples) - bad}/{len(samples)} samples exact"


def decomposition() -> tuple[bool, str]:
    bad_w = sum(1 for S, a in _admissible_samples()
                if not weyl_part(ricci_type_curvature(S, a)).is_ricci_type)
    rng = random.Random(SEED + 1)
    bad_r = 0
    total = 0
    for n in (2, 3):
        S = la.standard_symplectic_space(n)
        basis = curvature_space_basis(S)
        for _ in range(10):
            R = random_curvature_tensor(S, rng, basis)
            total += 1
            if not la.is_zero(ricci(weyl_part(R).W).matrix):
                bad_r += 1
    ok = bad_w == 0 and bad_r == 0
    return ok, f"W(E(A)) nonzero in {bad_w} samples; ricci(W) nonzero in {bad_r}/{total} tensors"


# -- 3 -----------------------------------------------------------------------

def _sp2_grid():
    vals = (-1, 0, 1)
    return [la.mat([[a, b], [c, -a]]) for a, b, c in product(vals, repeat=3)]


def product_sweep() -> tuple[bool, str]:
    grid = _sp2_grid()
    bad_equiv = bad_cross = 0
    for a1, a2 in product(grid, grid):
        rep = product_flatness_check(a1, a2)
        bad_equiv += not rep.equivalence_holds
        bad_cross += not rep.cross_matches_formula
    n = len(grid) ** 2
    return (bad_equiv == 0 and bad_cross == 0,
            f"{n} pairs; equivalence failures {bad_equiv}, cross-term mismatches {bad_cross}")


# -- 4 -----------------------------------------------------------------------

def _random_symplectic(S: la.SympSpace, rng: random.Random, steps: int = 3):
    """Product of transvections ``X -> X + c w(u, X) u``."""
    g = la.identity(S.dim)
    for _ in range(steps):
        u = [Fraction(rng.randint(-1, 1)) for _ in range(S.dim)]
        c = Fraction(rng.choice([-2, -1, 1, 2]))
        t = la.add(la.identity(S.dim), la.scale(c, la.outer(u, S.flat(u))))
        g = la.matmul(t, g)
    return g


def _scalar_square_samples(rng: random.Random) -> list:
    """Model endomorphisms (each with its own form), conjugated by random
    symplectic maps and rescaled."""
    params = [ModelParams("sl", 2)]
    params += [ModelParams("su", 2, p=p, q=2 - p) for p in range(3)]
    params += [ModelParams("nilpotent", 2, p=p, q=r - p, rank=r)
               for r in (1, 2) for p in range(r + 1)]
    seeds = [(m.triple.space, m.A) for m in map(build_model, params)]
    seeds.append((la.standard_symplectic_space(2), la.zeros(4)))
    out = []
    for S, a in seeds:
        for _ in range(3):
            g = _random_symplectic(S, rng)
            c = Fraction(rng.choice([1, 2, -3]), rng.choice([1, 2]))
            out.append((S, la.scale(c, la.matmul(g, la.matmul(a, la.inverse(g))))))
    return out


def scalarity() -> tuple[bool, str]:
    rng = random.Random(SEED + 2)
    bad_scalar = 0
    scalar_cases = _scalar_square_samples(rng)
    for S, a in scalar_cases:
        if not la.is_inf_symplectic(S, a) or square_scalar(a) is None:
            bad_scalar += 1
            continue
        R = ricci_type_curvature(S, a)
        if any(not la.is_zero(la.commutator(m, a)) for m in R.values.values()):
            bad_scalar += 1
    S = la.standard_symplectic_space(2)
    nonscalar = bad_non = 0
    while nonscalar < 20:
        a = random_admissible(S, rng)
        if square_scalar(a) is not None:
            continue
        nonscalar += 1
        R = ricci_type_curvature(S, a)
        commutes = all(la.is_zero(la.commutator(m, a)) for m in R.values.values())
        try:
            build_triple_from_A(S, a)
            rejected = False
        except NonScalarSquareError:
            rejected = True
        if commutes or not rejected:
            bad_non += 1
    ok = bad_scalar == 0 and bad_non == 0
    return ok, (f"scalar cases {len(scalar_cases) - bad_scalar}/{len(scalar_cases)}; "
                f"non-scalar cases {nonscalar - bad_non}/{nonscalar}")


# -- 5, 6 --------------------------------------------------------------------

def model_params(n: int) -> list[ModelParams]:
    out = [ModelParams("sl", n)]
    out += [ModelParams("su", n, p=p, q=n - p) for p in range(n + 1)]
    out += [ModelParams("nilpotent", n, p=p, q=r - p, rank=r)
            for r in range(1, n + 1) for p in range(r + 1)]
    return out


def model_validity() -> tuple[bool, str]:
    problems = []
    count = 0
    for n in (2, 3):
        for params in model_params(n):
            count += 1
            model = build_model(params)
            T = model.triple
            rep = validate_triple(T)
            if not rep.ok:
                problems.append(f"{params.to_json()}: {rep.failed()}")
                continue
            if model.embedding is not None:
                er = verify_embedding(model.embedding, T)
                dim_image = la.span_rank([la.flatten(m) for m in model.embedding.images])
                if not er.ok or dim_image != n * n + 2 * n:
                    problems.append(f"{params.to_json()}: embedding")
    return not problems, f"{count} models; problems: {problems or 'none'}"


def normalizations() -> tuple[bool, str]:
    problems = []
    for n in (2, 3):
        pos = build_positive_model(n)
        m = n + 1
        expected = la.block_diag(la.scale(m, la.identity(n)), la.scale(-m, la.identity(n)))
        if not la.mat_equal(pos.A, expected) or square_scalar(pos.A) != m * m:
            problems.append(f"positive n={n}")
        for p in range(n + 1):
            neg = build_negative_model(n, p, n - p)
            expected = la.scale(-2 * m, complex_structure(n))
            if not la.mat_equal(neg.A, expected) or square_scalar(neg.A) != -4 * m * m:
                problems.append(f"negative n={n} p={p}")
    return not problems, f"problems: {problems or 'none'}"


# -- 7 -----------------------------------------------------------------------

def so_killing_signature(p: int, q: int) -> tuple[int, int]:
    """Killing signature of so(p, q+1)."""
    return p * (q + 1), p * (p - 1) // 2 + q * (q + 1) // 2


def zero_structure() -> tuple[bool, str]:
    problems = []
    count = 0
    for n in (2, 3):
        for r in range(1, n + 1):
            for p in range(r + 1):
                q = r - p
                count += 1
                tag = f"(n={n}, r={r}, p={p}, q={q})"
                model = build_model(ModelParams("nilpotent", n, p=p, q=q, rank=r))
                T = model.triple
                g = T.algebra
                rad = model.radical_basis
                if not g.is_ideal(rad):
                    problems.append(f"{tag} radical not an ideal")
                    continue
                rr = g.bracket_span(rad, rad)
                if g.bracket_span(rad, rr):
                    problems.append(f"{tag} [r,[r,r]] != 0")
                if (not rr) != (r == n):
                    problems.append(f"{tag} [r,r]=0 iff rank=n fails")
                diag = lie_diagnostics(T)
                if diag.solvable != (r == 1):
                    problems.append(f"{tag} solvable iff rank=1 fails")
                if r > 1:
                    qrank, qsig = killing_rank_signature(g.quotient(rad))
                    levi_dim = (r + 1) * r // 2
                    if qrank != levi_dim or qsig != so_killing_signature(p, q):
                        problems.append(f"{tag} Levi Killing {qrank} {qsig}")
    return not problems, f"{count} cases; problems: {problems or 'none'}"


# -- 8 -----------------------------------------------------------------------

CATALOG_LABELS = [
    "SL(3,R)/GL(2,R)", "SU(1,2)/U(2)", "SU(2,1)/U(1,1)", "SU(3)/U(2)",
    "lambda=0, rank 1, p=0", "lambda=0, rank 1, p=1",
    "lambda=0, rank 2, p=0", "lambda=0, rank 2, p=1", "lambda=0, rank 2, p=2",
]


def catalog() -> tuple[bool, str]:
    entries = dim4_catalog()
    labels = [e.label for e in entries]
    compact = [e.label for e in entries if e.report.compact]
    ok = (len(entries) == 9 and sorted(labels) == sorted(CATALOG_LABELS)
          and all(e.valid for e in entries) and compact == ["SU(3)/U(2)"])
    return ok, f"{len(entries)} entries, compact: {compact}"


# -- 9 -----------------------------------------------------------------------

DETERMINISM_RUNS = (
    ["build", "--family", "su", "--n", "2", "--p", "1", "--q", "1"],
    ["catalog", "--dim", "4"],
)


def determinism() -> tuple[bool, str]:
    bad = []
    for args in DETERMINISM_RUNS:
        outs = [subprocess.run([sys.executable, "-m", "rtk", *args], capture_output=True,
                               check=False).stdout for _ in range(2)]
        if outs[0] != outs[1] or not outs[0]:
            bad.append(" ".join(args))
    return not bad, f"{len(DETERMINISM_RUNS)} commands; differing: {bad or 'none'}"


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]], float | None]] = [
    (1, "trace consistency", trace_consistency, 5.0),
    (2, "decomposition", decomposition, None),
    (3, "product flatness sweep", product_sweep, 30.0),
    (4, "scalar square and commutation", scalarity, None),
    (5, "model validity", model_validity, None),
    (6, "canonical normalizations", normalizations, None),
    (7, "lambda=0 structure", zero_structure, None),
    (8, "dimension 4 catalog", catalog, None),
    (9, "determinism", determinism, None),
]


def run_criterion(number: int) -> CriterionResult:
    for num, name, fn, budget in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            ok, detail = fn()
            dt = time.perf_counter() - t0
            if budget is not None and dt >= budget:
                ok = False
                detail += f"; over the {budget:g}s budget"
            return CriterionResult(num, name, ok, detail, dt)
    raise KeyError(number)


def run_all(skip: tuple[int, ...] = ()) -> list[CriterionResult]:
    return [run_criterion(num) for num, *_ in CRITERIA if num not in skip]
