"""Exact computations for Ricci-type symplectic curvature and the symmetric
triples it determines."""
from __future__ import annotations

from .classify import ClassificationReport, classify_triple, dim4_catalog, product_flatness_check
from .curvature import CurvatureTensor, ricci, ricci_type_curvature, weyl_part
from .kernels import BACKEND
from .linalg import SympSpace, standard_symplectic_space
from .models import ModelParams, build_model
from .scalars import QuadExt
from .triple import SymmetricTriple, build_triple_from_A, validate_triple

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClassificationReport",
    "CurvatureTensor",
    "ModelParams",
    "QuadExt",
    "SymmetricTriple",
    "SympSpace",
    "build_model",
    "build_triple_from_A",
    "classify_triple",
    "dim4_catalog",
    "product_flatness_check",
    "ricci",
    "ricci_type_curvature",
    "standard_symplectic_space",
    "validate_triple",
    "weyl_part",
]
