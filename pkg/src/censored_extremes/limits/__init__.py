"""
Extreme-value limits: norming constants, limit laws, the Gumbel-pair oracle and
the tail-asymptotics checks
"""

from .asymptotics import (
    check_auxiliary_derivative_decay,
    check_converse,
    check_regular_variation_U,
    check_tail_asymptotics,
    check_von_mises_representation,
    success_prob,
)
from .laws import (
    LimitLaw,
    count_law_pmf,
    count_law_tail,
    gumbel_marginal_cdf,
    l_law_cdf,
    l_law_quantile,
    l_law_tail,
    poisson_mixture_pmf,
    r_law_tail,
    r_ratio_tail,
    r_ratio_tail_at_zero,
)
from .norming import norming_constants, solve_observed_tail_level, tail_level_grid
from .oracle import OracleEstimate, check_r_law, gumbel_pair, oracle_estimates

__all__ = [
    "check_auxiliary_derivative_decay",
    "check_converse",
    "check_regular_variation_U",
    "check_tail_asymptotics",
    "check_von_mises_representation",
    "success_prob",
    "LimitLaw",
    "count_law_pmf",
    "count_law_tail",
    "gumbel_marginal_cdf",
    "l_law_cdf",
    "l_law_quantile",
    "l_law_tail",
    "poisson_mixture_pmf",
    "r_law_tail",
    "r_ratio_tail",
    "r_ratio_tail_at_zero",
    "norming_constants",
    "solve_observed_tail_level",
    "tail_level_grid",
    "OracleEstimate",
    "check_r_law",
    "gumbel_pair",
    "oracle_estimates",
]
