"""
Adaptive quadrature wrapper around scipy.integrate.quad
"""

import logging
from typing import Callable, NamedTuple, Optional, Sequence

import numpy as np
from scipy.integrate import quad

from ..errors import QuadratureError

logger = logging.getLogger(__name__)

DEFAULT_EPSABS = 1e-10
DEFAULT_EPSREL = 1e-10
DEFAULT_LIMIT = 200


class QuadratureResult(NamedTuple):
    value: float
    abserr: float
    neval: int


def integrate(
    func: Callable[[float], float],
    a: float,
    b: float,
    what: str,
    epsabs: float = DEFAULT_EPSABS,
    epsrel: float = DEFAULT_EPSREL,
    max_error: float = 1e-8,
    points: Optional[Sequence[float]] = None,
    limit: int = DEFAULT_LIMIT,
) -> QuadratureResult:
    """
    Integrate func over (a, b) with QUADPACK

    A QUADPACK warning is tolerated when the reported error estimate is still
    below max_error; otherwise QuadratureError carries the achieved estimate.
    """
    kwargs = {"epsabs": epsabs, "epsrel": epsrel, "limit": limit, "full_output": 1}
    if points is not None:
        kwargs["points"] = list(points)
    try:
        result = quad(func, a, b, **kwargs)
    except (ValueError, ZeroDivisionError, FloatingPointError, OverflowError) as e:
        raise QuadratureError(f"Failed to integrate {what}: {str(e)}") from e

    value, abserr, info = result[0], result[1], result[2]
    message = result[3] if len(result) > 3 else None

    if not np.isfinite(value):
        raise QuadratureError(f"Failed to integrate {what}: non-finite value", value)

    if message is not None:
        if abserr > max_error:
            raise QuadratureError(
                f"Failed to integrate {what}: {message.strip()}", value, abserr
            )
        logger.warning(
            "Quadrature for %s accepted with warning (abserr=%.3g): %s",
            what,
            abserr,
            message.strip().splitlines()[0],
        )

    logger.debug("Integrated %s = %.17g (abserr %.3g)", what, value, abserr)
    return QuadratureResult(float(value), float(abserr), int(info.get("neval", 0)))


def integrate_half_line(
    func: Callable[[float], float],
    lower: float,
    what: str,
    **kwargs,
) -> QuadratureResult:
    """
    Integrate func over (lower, ∞) through the substitution x = lower + t/(1−t)

    lower may be −∞, in which case the line is split at 0 and the negative half
    uses the mirrored substitution.
    """
    if np.isneginf(lower):
        right = integrate_half_line(func, 0.0, f"{what} (positive half)", **kwargs)
        left = integrate_half_line(
            lambda x: func(-x), 0.0, f"{what} (negative half)", **kwargs
        )
        return QuadratureResult(
            right.value + left.value,
            right.abserr + left.abserr,
            right.neval + left.neval,
        )

    def transformed(t: float) -> float:
        one_minus = 1.0 - t
        if one_minus <= 0.0:
            return 0.0
        return func(lower + t / one_minus) / (one_minus * one_minus)

    return integrate(transformed, 0.0, 1.0, what, **kwargs)
