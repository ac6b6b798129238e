"""
Low-level numerics: quadrature, root bracketing and normal-tail functions
"""

from .normal import (
    log_norm_pdf,
    log_norm_sf,
    mills_ratio,
    mills_ratio_derivative,
    norm_isf_from_log,
    norm_sf,
)
from .quadrature import QuadratureResult, integrate, integrate_half_line
from .roots import bracket_upward, solve_decreasing
from .streams import MAX_SEED, stream_rng

__all__ = [
    "log_norm_pdf",
    "log_norm_sf",
    "mills_ratio",
    "mills_ratio_derivative",
    "norm_isf_from_log",
    "norm_sf",
    "QuadratureResult",
    "integrate",
    "integrate_half_line",
    "bracket_upward",
    "solve_decreasing",
    "MAX_SEED",
    "stream_rng",
]
