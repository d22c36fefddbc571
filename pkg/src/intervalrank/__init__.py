"""Exact full-rank and maximal-rank decisions for general closed interval matrices."""

from .core import (
    GIMatrix,
    GInterval,
    Kind,
    RMatrix,
    as_scalar,
    bar,
    contains,
    delete,
    det,
    left_matrix,
    rank,
    take_left,
    take_right,
    tilde,
)
from .detc import PgDiagonal, complementary, detc, max_rank, max_rank_lt_p, totally_nonconstant_diagonals
from .genfull import HalfBoundedTuple, Verdict, full_rank_general, sign_exponent, singular_completion, verify_verdict
from .oracle import SampleConfig, sample_max_rank, singular_witness, vertex_det_range
from .rectlp import rect_check, rect_full_rank
from .rohn import (
    center,
    cxy,
    even_type_vertices,
    is_even_type,
    radius,
    rohn_full_rank_signs,
    rohn_full_rank_vertex,
    vertex_matrices,
)
from .textio import format_matrix, parse_matrix

__version__ = "0.1.0"

__all__ = [
    "GIMatrix",
    "GInterval",
    "Kind",
    "RMatrix",
    "as_scalar",
    "bar",
    "contains",
    "delete",
    "det",
    "left_matrix",
    "rank",
    "take_left",
    "take_right",
    "tilde",
    "PgDiagonal",
    "complementary",
    "detc",
    "max_rank",
    "max_rank_lt_p",
    "totally_nonconstant_diagonals",
    "HalfBoundedTuple",
    "Verdict",
    "full_rank_general",
    "sign_exponent",
    "singular_completion",
    "verify_verdict",
    "SampleConfig",
    "sample_max_rank",
    "singular_witness",
    "vertex_det_range",
    "rect_check",
    "rect_full_rank",
    "center",
    "cxy",
    "even_type_vertices",
    "is_even_type",
    "radius",
    "rohn_full_rank_signs",
    "rohn_full_rank_vertex",
    "vertex_matrices",
    "format_matrix",
    "parse_matrix",
]
