"""Exact Decomposition Theorem data for special Schubert varieties."""

from .decomposition import (
    h_poly,
    ih_matrix,
    ih_recursion,
    local_decomposition,
    perverse_table,
    small_resolution_oracle,
    stalk_table,
    summand_table,
)
from .geometry import SchubertInput, validate
from .partitions import Partition, Rectangle
from .poly import LaurentPoly, gaussian_binomial, grassmannian_poincare
from .schur import RingSpec, SchurVector, lr_multiply

__version__ = "0.1.0"
