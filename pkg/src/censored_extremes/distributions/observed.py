"""
Observed-time quantities: H̄ = F̄·Ḡ, h = fg/(f+g) and the tail integrals
∫_x^∞ Ḡ dF and ∫_x^∞ F̄ dG
"""

from typing import TYPE_CHECKING

import numpy as np

from ..errors import DomainError
from ..numerics import integrate_half_line
from .families import DistributionBase

if TYPE_CHECKING:
    from .setup import CensoringSetup

TAIL_EPSABS = 1e-10
RATIO_EPSABS = 1e-12


def _log_tail_ext(model: DistributionBase, x: float) -> float:
    # below the support the tail is 1
    if x < model.support_lower:
        return 0.0
    with np.errstate(divide="ignore"):
        return float(model._log_tail(np.asarray(x, dtype=float)))


def _log_density_ext(model: DistributionBase, x: float) -> float:
    if x < model.support_lower:
        return -np.inf
    with np.errstate(divide="ignore", over="ignore"):
        return float(model._log_density(np.asarray(x, dtype=float)))


def observed_log_tail(setup: "CensoringSetup", x):
    """log H̄(x) = log F̄(x) + log Ḡ(x)"""
    return setup.lifetime.log_tail(x) + setup.censoring.log_tail(x)


def observed_tail(setup: "CensoringSetup", x):
    """H̄(x) = F̄(x)Ḡ(x), the tail of an observed time under p = 1"""
    return np.exp(observed_log_tail(setup, x))


def observed_auxiliary(setup: "CensoringSetup", x):
    """h(x) = f(x)g(x)/(f(x)+g(x)), the auxiliary function of H̄"""
    f = np.asarray(setup.lifetime.auxiliary(x))
    g = np.asarray(setup.censoring.auxiliary(x))
    h = f * g / (f + g)
    return float(h) if np.ndim(h) == 0 else h


def _unchecked_observed_auxiliary(setup: "CensoringSetup", x: float) -> float:
    f = float(setup.lifetime._auxiliary(np.asarray(x, dtype=float)))
    g = float(setup.censoring._auxiliary(np.asarray(x, dtype=float)))
    return f * g / (f + g)


def tail_integral(
    density_model: DistributionBase,
    tail_model: DistributionBase,
    x: float,
    what: str,
) -> float:
    """∫_x^∞ (tail of tail_model)·(density of density_model) ds"""

    def integrand(s: float) -> float:
        return float(
            np.exp(_log_tail_ext(tail_model, s) + _log_density_ext(density_model, s))
        )

    return integrate_half_line(integrand, x, what, epsabs=TAIL_EPSABS).value


def tail_integral_ratio(
    density_model: DistributionBase,
    tail_model: DistributionBase,
    x: float,
    scale: float,
    what: str,
) -> float:
    """
    ∫_x^∞ (tail of tail_model) d(density_model) divided by H̄(x)

    Integrates over s = x + scale·u in log space, so the ratio stays accurate
    where H̄(x) itself underflows.
    """
    log_h_bar = _log_tail_ext(tail_model, x) + _log_tail_ext(density_model, x)
    if not np.isfinite(log_h_bar):
        raise DomainError(f"{what}: observed tail vanishes at x={x!r}")

    def integrand(u: float) -> float:
        s = x + scale * u
        log_value = (
            _log_tail_ext(tail_model, s) + _log_density_ext(density_model, s) - log_h_bar
        )
        return float(np.exp(log_value)) * scale

    return integrate_half_line(integrand, 0.0, what, epsabs=RATIO_EPSABS).value


def tail_scale(setup: "CensoringSetup", x: float) -> float:
    """Local scale h(x) for the tail integrals, 1 below the representation interval"""
    if x > setup.representation_start:
        return _unchecked_observed_auxiliary(setup, x)
    return 1.0


def uncensored_tail_ratio(setup: "CensoringSetup", x: float) -> float:
    """∫_x^∞ Ḡ dF / H̄(x)"""
    return tail_integral_ratio(
        setup.lifetime,
        setup.censoring,
        x,
        tail_scale(setup, x),
        f"uncensored tail ratio at x={x!r}",
    )


def censored_tail_ratio(setup: "CensoringSetup", x: float) -> float:
    """∫_x^∞ F̄ dG / H̄(x)"""
    return tail_integral_ratio(
        setup.censoring,
        setup.lifetime,
        x,
        tail_scale(setup, x),
        f"censored tail ratio at x={x!r}",
    )


def uncensored_tail(setup: "CensoringSetup", x: float) -> float:
    """P[T_{K^u_1} > x], the tail of a lifetime observed uncensored"""
    setup.require_proper("uncensored_tail")
    return float(
        observed_tail(setup, x) * uncensored_tail_ratio(setup, x) / setup.p_u
    )


def censored_tail(setup: "CensoringSetup", x: float) -> float:
    """P[U_{K^c_1} > x], the tail of a censoring time that was observed"""
    setup.require_proper("censored_tail")
    return float(observed_tail(setup, x) * censored_tail_ratio(setup, x) / setup.p_c)
