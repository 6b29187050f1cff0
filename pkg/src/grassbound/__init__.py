"""Exact bounds for s-distance sets of subspaces and executable checks of them."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    baseline_balla,
    baseline_chs,
    baseline_fs_balla,
    bound_equiangular,
    bound_fs_exact,
    bound_lines_spherical,
    compare,
)
from .hilbert import fs_leading_coefficient, hilbert_even_sum, hilbert_value
from .leading import chordal_leading_term, d_kn
from .scalars import DomainError

__all__ = [
    "BoundReport",
    "DomainError",
    "baseline_balla",
    "baseline_chs",
    "baseline_fs_balla",
    "bound_equiangular",
    "bound_fs_exact",
    "bound_lines_spherical",
    "chordal_leading_term",
    "compare",
    "d_kn",
    "fs_leading_coefficient",
    "hilbert_even_sum",
    "hilbert_value",
]
