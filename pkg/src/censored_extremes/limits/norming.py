"""
Norming constants b_n, a_n solving n·H̄(b_n) = 1, a_n = h(b_n)
"""

import logging
import math

import numpy as np

from ..distributions import CensoringSetup, observed_auxiliary
from ..errors import BracketError, DomainError
from ..models.law_models import NormingConstants
from ..numerics import bracket_upward, solve_decreasing

logger = logging.getLogger(__name__)


def _unchecked_log_tail(setup: CensoringSetup, x: float) -> float:
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore"):
        return float(setup.lifetime._log_tail(x) + setup.censoring._log_tail(x))


def solve_observed_tail_level(setup: CensoringSetup, log_level: float, what: str) -> float:
    """
    Point x >= x0 with log H̄(x) = log_level

    Brackets by doubling upward from the representation start, then bisects to
    width 1e-12·max(1, |x|) on the monotone log tail.
    """
    start = setup.representation_start
    log_start = _unchecked_log_tail(setup, start)
    if log_start < log_level:
        raise BracketError(
            f"Failed to solve {what}: H̄(x0)={math.exp(log_start):.6g} is already "
            f"below the target level {math.exp(log_level):.6g}"
        )

    def objective(x: float) -> float:
        return _unchecked_log_tail(setup, x) - log_level

    hi = bracket_upward(objective, start, what, step=max(1.0, abs(start)))
    root = solve_decreasing(objective, start, hi, what)
    logger.debug("Solved %s: x=%.17g", what, root)
    return root


def norming_constants(setup: CensoringSetup, n: int) -> NormingConstants:
    """b_n and a_n for the maximum of n observed times"""
    if n < 2:
        raise DomainError(f"norming constants need n >= 2, got {n}")
    setup.require_proper("norming_constants")

    b_n = solve_observed_tail_level(setup, -math.log(n), f"b_n for n={n}")
    if b_n <= setup.representation_start:
        raise BracketError(
            f"b_n={b_n!r} for n={n} does not lie inside the representation interval"
        )
    a_n = observed_auxiliary(setup, b_n)
    return NormingConstants(n=n, b_n=b_n, a_n=a_n)


def tail_level_grid(setup: CensoringSetup, levels=(1e-2, 1e-4, 1e-6, 1e-8)) -> list:
    """Points x with H̄(x) equal to each tail level, comparable across families"""
    return [
        solve_observed_tail_level(setup, math.log(level), f"x at H̄={level:g}")
        for level in levels
    ]
