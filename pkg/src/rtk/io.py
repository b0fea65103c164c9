"""JSON encodings.

* scalar: ``"p/q"`` (``"3"`` for integers) or ``{"a": ..., "b": ..., "d": d}``
* matrix: row-major list of rows of scalars
* curvature: ``{"n", "omega", "R": {"i,j": matrix}}`` with 0-based ``i < j``
* triple: ``{"n", "omega", "k_basis": [matrix], "pp_bracket": {"i,j": coeffs}}``

All writers build dicts in a fixed key order so output is byte-stable.
"""
from __future__ import annotations

import json

from . import linalg as la
from .curvature import CurvatureTensor
from .linalg import SympSpace
from .scalars import scalar_from_json, scalar_to_json
from .triple import SymmetricTriple


class SchemaError(ValueError):
    """Input JSON does not match the expected shape."""


def matrix_to_json(m) -> list:
    return [[scalar_to_json(x) for x in row] for row in m]


def matrix_from_json(obj) -> list:
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise SchemaError("a matrix must be a list of rows")
    if obj and len({len(r) for r in obj}) != 1:
        raise SchemaError("matrix rows have different lengths")
    try:
        return [[scalar_from_json(x) for x in row] for row in obj]
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad scalar: {exc}") from None


def _pair(key: str) -> tuple[int, int]:
    try:
        i, j = (int(t) for t in key.split(","))
    except ValueError:
        raise SchemaError(f"bad index pair {key!r}") from None
    return i, j


def _space(obj: dict) -> SympSpace:
    if "omega" in obj:
        space = SympSpace(matrix_from_json(obj["omega"]))
    elif "n" in obj:
        space = la.standard_symplectic_space(int(obj["n"]))
    else:
        raise SchemaError("need 'omega' or 'n'")
    if "n" in obj and int(obj["n"]) != space.n:
        raise SchemaError("'n' does not match omega")
    return space


def curvature_to_json(R: CurvatureTensor) -> dict:
    return {
        "n": R.space.n,
        "omega": matrix_to_json(R.space.omega),
        "R": {f"{i},{j}": matrix_to_json(m) for (i, j), m in sorted(R.values.items())},
    }


def curvature_from_json(obj: dict) -> CurvatureTensor:
    if not isinstance(obj, dict) or "R" not in obj:
        raise SchemaError("curvature JSON needs an 'R' object")
    space = _space(obj)
    values = {_pair(k): matrix_from_json(v) for k, v in obj["R"].items()}
    return CurvatureTensor(space, values)


def triple_to_json(T: SymmetricTriple) -> dict:
    return {
        "n": T.space.n,
        "omega": matrix_to_json(T.space.omega),
        "k_basis": [matrix_to_json(k) for k in T.k_basis],
        "pp_bracket": {f"{i},{j}": [scalar_to_json(x) for x in c]
                       for (i, j), c in sorted(T.pp_bracket.items())},
    }


def triple_from_json(obj: dict) -> SymmetricTriple:
    if not isinstance(obj, dict) or "k_basis" not in obj or "pp_bracket" not in obj:
        raise SchemaError("triple JSON needs 'k_basis' and 'pp_bracket'")
    space = _space(obj)
    k_basis = [matrix_from_json(k) for k in obj["k_basis"]]
    try:
        pp = {_pair(k): [scalar_from_json(x) for x in v] for k, v in obj["pp_bracket"].items()}
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(str(exc)) from None
    return SymmetricTriple(space, tuple(k_basis), pp)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"
