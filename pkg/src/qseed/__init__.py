"""Exact-arithmetic toolkit for quasi-polynomial defining matrices,
quasi-commutation matrices of quantum minors, and quantum-seed data."""

__version__ = "0.1.0"

from .exactmat import (  # noqa: F401
    DimensionError,
    IntMatrix,
    KernelBasis,
    RatMatrix,
    block_assemble,
    det,
    inverse,
    kernel,
    rank,
)
from .families import Family, FamilySpec, build_H, build_H_extended, build_T_basis  # noqa: F401
from .skewform import SkewForm, skew_normal_form  # noqa: F401
from .seeds import CompatiblePair, build_lambda, compatible_pair, left_reduce  # noqa: F401
