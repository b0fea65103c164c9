"""Kernel selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or
when ``RTK_PURE_PYTHON`` is set to a non-empty value other than ``0``, the
pure-Python ``_pykernels`` are used.  ``BACKEND`` names the active choice.
"""
import os

from . import _pykernels

_force_pure = os.environ.get("RTK_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

row_reduce = _impl.row_reduce
matmul = _impl.matmul
sparse_table = _impl.sparse_table
bracket = _impl.bracket
jacobi_failures = _impl.jacobi_failures
killing_matrix = _impl.killing_matrix

__all__ = [
    "BACKEND",
    "row_reduce",
    "matmul",
    "sparse_table",
    "bracket",
    "jacobi_failures",
    "killing_matrix",
]
