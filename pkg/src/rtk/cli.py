"""Command-line front end: ``python -m rtk <subcommand> ...``.

Exit codes: 0 when every check passed, 1 for a mathematical validation
failure (the JSON output then lists the failures), 2 for malformed input or
bad flags.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import io
from . import linalg as la
from .classify import classify_triple, dim_catalog, product_flatness_check
from .curvature import satisfies_bianchi, weyl_part
from .errors import RTKError
from .models import ModelParams, build_model
from .scalars import scalar_to_json
from .triple import validate_triple

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def max_dim() -> int:
    raw = os.environ.get("RTK_MAX_DIM", "12")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"RTK_MAX_DIM must be an integer, got {raw!r}") from None


def _check_dim(dim: int) -> None:
    cap = max_dim()
    if dim > cap:
        raise UsageError(f"dimension {dim} exceeds RTK_MAX_DIM={cap}")


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {path}: {exc}") from None


def _parse_or_usage(fn, obj):
    try:
        return fn(obj)
    except (io.SchemaError, la.DimensionMismatch, KeyError, TypeError) as exc:
        raise UsageError(f"input does not match the schema: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"invalid input: {exc}") from None


# -- subcommands ---------------------------------------------------------------

def cmd_build(args) -> tuple[int, object]:
    try:
        params = ModelParams(args.family, args.n, Fraction(args.s), args.p, args.q, args.rank)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from None
    _check_dim(2 * params.n)
    model = build_model(params)
    out = {"model": params.to_json(), "dim_g": model.triple.dim,
           "A": io.matrix_to_json(model.A)}
    out.update(io.triple_to_json(model.triple))
    return EXIT_OK, out


def _load_triple(obj):
    T = _parse_or_usage(io.triple_from_json, obj)
    _check_dim(T.space.dim)
    return T


def _load_curvature(obj):
    R = _parse_or_usage(io.curvature_from_json, obj)
    _check_dim(R.space.dim)
    return R


def cmd_validate(args) -> tuple[int, object]:
    obj = _read_json(args.input)
    if isinstance(obj, dict) and "R" in obj:
        R = _load_curvature(obj)
        checks = {
            "symplectic_values": R.is_symplectic(),
            "first_bianchi": satisfies_bianchi(R),
        }
        ok = all(checks.values())
        report = {"kind": "curvature", "ok": ok, "checks": checks,
                  "failures": [k for k, v in checks.items() if not v]}
        return (EXIT_OK if ok else EXIT_FAIL), report
    T = _load_triple(obj)
    rep = validate_triple(T)
    out = {"kind": "triple"}
    out.update(rep.to_json())
    out["failures"] = rep.failed()
    return (EXIT_OK if rep.ok else EXIT_FAIL), out


def cmd_classify(args) -> tuple[int, object]:
    T = _load_triple(_read_json(args.input))
    try:
        report = classify_triple(T)
    except RTKError as exc:
        return EXIT_FAIL, {"ok": False, "error": type(exc).__name__, "failures": [str(exc)]}
    return EXIT_OK, report.to_json()


def cmd_decompose(args) -> tuple[int, object]:
    R = _load_curvature(_read_json(args.input))
    dec = weyl_part(R)
    data = dec.ricci_data
    return EXIT_OK, {
        "ricci": io.matrix_to_json(data.r.matrix),
        "A": io.matrix_to_json(data.A),
        "lambda": None if data.lam is None else scalar_to_json(data.lam),
        "W": io.curvature_to_json(dec.W)["R"],
        "is_ricci_type": dec.is_ricci_type,
    }


def _product_input(obj):
    if not isinstance(obj, dict) or "A1" not in obj or "A2" not in obj:
        raise io.SchemaError("product-check input needs 'A1' and 'A2'")
    a1, a2 = io.matrix_from_json(obj["A1"]), io.matrix_from_json(obj["A2"])
    s1 = la.SympSpace(io.matrix_from_json(obj["omega1"])) if "omega1" in obj else None
    s2 = la.SympSpace(io.matrix_from_json(obj["omega2"])) if "omega2" in obj else None
    for a in (a1, a2):
        if len(a) % 2 or la.shape(a)[0] != la.shape(a)[1]:
            raise io.SchemaError("A1 and A2 must be square of even size")
    return a1, a2, s1, s2


def cmd_product_check(args) -> tuple[int, object]:
    a1, a2, s1, s2 = _parse_or_usage(_product_input, _read_json(args.input))
    _check_dim(len(a1) + len(a2))
    try:
        rep = product_flatness_check(a1, a2, s1, s2)
    except RTKError as exc:
        return EXIT_FAIL, {"ok": False, "error": type(exc).__name__, "failures": [str(exc)]}
    out = rep.to_json()
    ok = rep.equivalence_holds and rep.cross_matches_formula
    return (EXIT_OK if ok else EXIT_FAIL), out


def cmd_catalog(args) -> tuple[int, object]:
    if args.dim < 4 or args.dim % 2:
        raise UsageError("--dim must be an even integer >= 4")
    _check_dim(args.dim)
    entries = dim_catalog(args.dim // 2)
    ok = all(e.valid for e in entries)
    return (EXIT_OK if ok else EXIT_FAIL), [e.to_json() for e in entries]


def cmd_selftest(args) -> tuple[int, object]:
    from .acceptance import run_all
    from .kernels import BACKEND

    results = run_all(skip=tuple(args.skip or ()))
    for res in results:
        print(res.line(), file=sys.stderr)
    passed = sum(r.passed for r in results)
    out = {"backend": BACKEND, "passed": passed, "failed": len(results) - passed,
           "criteria": [r.to_json() for r in results]}
    return (EXIT_OK if passed == len(results) else EXIT_FAIL), out


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rtk", description="Ricci-type symplectic symmetric "
                                     "spaces: exact construction, validation and classification.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write JSON here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="build a model triple")
    b.add_argument("--family", required=True,
                   choices=["sl", "su", "nilpotent", "positive", "negative", "zero"])
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--s", default="1", help="scale, a rational such as 1 or 2/3")
    b.add_argument("--p", type=int)
    b.add_argument("--q", type=int)
    b.add_argument("--rank", type=int)
    b.set_defaults(func=cmd_build)

    for name, func, what in (("validate", cmd_validate, "a triple or curvature JSON file"),
                             ("classify", cmd_classify, "a triple JSON file"),
                             ("decompose", cmd_decompose, "a curvature JSON file"),
                             ("product-check", cmd_product_check,
                              "JSON with A1, A2 and optional omega1, omega2")):
        p = sub.add_parser(name, parents=[common], help=f"{name} {what}")
        p.add_argument("input", help=f"{what}, or - for standard input")
        p.set_defaults(func=func)

    c = sub.add_parser("catalog", parents=[common], help="every model of the given dimension")
    c.add_argument("--dim", type=int, default=4)
    c.set_defaults(func=cmd_catalog)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    s.add_argument("--skip", type=int, action="append", help="criterion number to skip")
    s.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        code, payload = args.func(args)
    except UsageError as exc:
        print(f"rtk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = io.dumps(payload)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code
