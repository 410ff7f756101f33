"""Exact scalar tower and polynomial kernel."""
from .scalars import (I, SQRT_M3, FieldMismatch, QuadExt, Scalar, close, decode, encode,
                      is_exact, is_zero, principal_root)
from .poly import MultiPoly, UnknownVariable, poly_ops
from .univariate import (UniPoly, bareiss_det, discriminant_poly, discriminant_univariate,
                         resultant, sylvester_matrix, symmetric_expand, z_names)

__all__ = [
    "I", "SQRT_M3", "FieldMismatch", "QuadExt", "Scalar", "close", "decode", "encode",
    "is_exact", "is_zero", "principal_root", "MultiPoly", "UnknownVariable", "poly_ops",
    "UniPoly", "bareiss_det", "discriminant_poly", "discriminant_univariate", "resultant",
    "sylvester_matrix", "symmetric_expand", "z_names",
]
