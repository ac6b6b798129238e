"""
Bracketing and bisection for monotone decreasing functions
"""

import logging
from typing import Callable

import numpy as np
from scipy.optimize import bisect

from ..errors import BracketError

logger = logging.getLogger(__name__)

ROOT_XTOL = 1e-12
ROOT_RTOL = 1e-12
MAX_DOUBLINGS = 1100


def bracket_upward(
    func: Callable[[float], float],
    start: float,
    what: str,
    step: float = 1.0,
) -> float:
    """
    Return hi > start with func(hi) < 0, doubling the step from start

    func must be non-increasing with func(start) >= 0.
    """
    for _ in range(MAX_DOUBLINGS):
        hi = start + step
        value = func(hi)
        if value < 0:
            logger.debug("Bracketed %s on [%.6g, %.6g]", what, start, hi)
            return hi
        if not np.isfinite(hi):
            break
        step *= 2.0
    raise BracketError(f"Failed to bracket {what} above {start!r}")


def solve_decreasing(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    what: str,
    xtol: float = ROOT_XTOL,
    rtol: float = ROOT_RTOL,
    maxiter: int = 400,
) -> float:
    """Bisection on [lo, hi] for func(lo) >= 0 > func(hi)"""
    f_lo = func(lo)
    if f_lo == 0:
        return lo
    try:
        return float(bisect(func, lo, hi, xtol=xtol, rtol=rtol, maxiter=maxiter))
    except (ValueError, RuntimeError) as e:
        raise BracketError(f"Failed to solve {what} on [{lo!r}, {hi!r}]: {str(e)}") from e
