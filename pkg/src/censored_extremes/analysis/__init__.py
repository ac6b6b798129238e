"""
Goodness-of-fit against the limit laws, κ estimation and the cure test
"""

from .cure_test import CriticalValue, critical_value, cure_test
from .fit import (
    check_np_limit,
    chi_square_count_law,
    fit_count_law,
    ks_against_gumbel_marginal,
    ks_against_l_law,
    null_ks_threshold,
    stretch_trend,
)
from .kappa_estimation import estimate_kappa

__all__ = [
    "CriticalValue",
    "critical_value",
    "cure_test",
    "check_np_limit",
    "chi_square_count_law",
    "fit_count_law",
    "ks_against_gumbel_marginal",
    "ks_against_l_law",
    "null_ks_threshold",
    "stretch_trend",
    "estimate_kappa",
]
