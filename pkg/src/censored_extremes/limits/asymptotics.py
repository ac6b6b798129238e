"""
Numerical checks of the tail asymptotics of censored and uncensored lifetimes
"""

import logging
import math
from typing import Optional, Sequence

import numpy as np

from ..distributions import (
    CensoringSetup,
    DistributionBase,
    censored_tail,
    censored_tail_ratio,
    observed_log_tail,
    uncensored_tail_ratio,
)
from ..distributions.kappa import weibull_parameters
from ..errors import DomainError
from ..models.report_models import (
    AuxiliaryDecayReport,
    ConverseReport,
    RegularVariationReport,
    RepresentationReport,
    TailAsymptoticsReport,
)
from ..numerics import integrate
from ..utils.trends import is_non_increasing
from .norming import tail_level_grid

logger = logging.getLogger(__name__)

TREND_SLACK = 1e-9
DEFAULT_T_GRID = tuple(10.0**k for k in (2, 4, 8, 16, 32, 64, 128))


def _grid(setup: CensoringSetup, x_grid: Optional[Sequence[float]]) -> list:
    grid = tail_level_grid(setup) if x_grid is None else [float(x) for x in x_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("x_grid must be strictly increasing")
    return grid


def success_prob(setup: CensoringSetup, t):
    """
    p(t) = ∫_t^∞ F̄ dG / ∫_0^∞ F̄ dG

    Closed form e^{−(λ+μ)t^α} for Weibull pairs of equal shape; H̄(t) for
    identical lifetime and censoring laws; quadrature otherwise.
    """
    setup.require_proper("success_prob")
    t_arr = np.asarray(t, dtype=float)
    lower = min(setup.lifetime.support_lower, setup.censoring.support_lower)
    if np.any(np.isnan(t_arr)) or np.any(t_arr < lower):
        raise DomainError("success_prob: t outside support")

    wf = weibull_parameters(setup.lifetime)
    wg = weibull_parameters(setup.censoring)
    if wf is not None and wg is not None and wf[0] == wg[0]:
        value = np.exp(-(wf[1] + wg[1]) * np.power(t_arr, wf[0]))
    elif setup.lifetime == setup.censoring:
        value = np.exp(observed_log_tail(setup, t_arr))
    else:
        # P[U_{K^c_1} > t] is the same integral
        value = np.array(
            [censored_tail(setup, float(x)) for x in t_arr.reshape(-1)]
        ).reshape(t_arr.shape)
    return float(value) if np.ndim(value) == 0 else value


def check_tail_asymptotics(
    setup: CensoringSetup, x_grid: Optional[Sequence[float]] = None
) -> TailAsymptoticsReport:
    """
    Convergence of ∫_x^∞ Ḡ dF / H̄(x) to 1/(1+κ) and of ∫_x^∞ F̄ dG / H̄(x)
    to κ/(1+κ) (to 0 when κ = 0) along the grid
    """
    setup.require_proper("check_tail_asymptotics")
    kappa = setup.require_finite_kappa("check_tail_asymptotics")
    grid = _grid(setup, x_grid)

    uncensored = [uncensored_tail_ratio(setup, x) for x in grid]
    censored = [censored_tail_ratio(setup, x) for x in grid]
    target_u = 1.0 / (1.0 + kappa)
    target_c = kappa / (1.0 + kappa)
    disc_u = [abs(u - target_u) for u in uncensored]
    disc_c = [abs(c - target_c) for c in censored]

    report = TailAsymptoticsReport(
        kappa=kappa,
        grid=grid,
        discrepancies=disc_u,
        monotone_trend=is_non_increasing(disc_u, TREND_SLACK),
        uncensored_ratio=uncensored,
        censored_ratio=censored,
        uncensored_target=target_u,
        censored_target=target_c,
        censored_discrepancies=disc_c,
        censored_monotone_trend=is_non_increasing(disc_c, TREND_SLACK),
        complement_error=max(abs(u + c - 1.0) for u, c in zip(uncensored, censored)),
    )
    logger.info(
        "Tail asymptotics for %s: final discrepancies %.3g / %.3g",
        setup.label(),
        disc_u[-1],
        disc_c[-1],
    )
    return report


def check_converse(
    setup: CensoringSetup, x_grid: Optional[Sequence[float]] = None
) -> ConverseReport:
    """
    Recover f/g from k(x) = ∫_x^∞ Ḡ dF / H̄(x) through (1 − k)/k and report
    |(1 − k)/k − f(x)/g(x)| along the grid
    """
    setup.require_proper("check_converse")
    kappa = setup.require_finite_kappa("check_converse")
    if kappa == 0:
        raise DomainError("check_converse needs 0 < κ < ∞")
    grid = _grid(setup, x_grid)

    k_values, implied, aux_ratio, disc = [], [], [], []
    for x in grid:
        k = uncensored_tail_ratio(setup, x)
        if not 0.0 < k < 1.0:
            raise DomainError(f"check_converse needs 0 < k < 1, got k={k!r} at x={x!r}")
        ratio = float(setup.lifetime.auxiliary(x) / setup.censoring.auxiliary(x))
        k_values.append(k)
        implied.append((1.0 - k) / k)
        aux_ratio.append(ratio)
        disc.append(abs(implied[-1] - ratio))

    return ConverseReport(
        kappa=kappa,
        grid=grid,
        discrepancies=disc,
        monotone_trend=is_non_increasing(disc, TREND_SLACK),
        k_values=k_values,
        implied_ratio=implied,
        auxiliary_ratio=aux_ratio,
        final_discrepancy=disc[-1],
    )


def _log_u(setup: CensoringSetup, log_t: float) -> float:
    """log U(t) with U(t) = 1/Ḡ(F̄⁻¹(1/t))"""
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        x = setup.lifetime._isf_from_log(np.asarray(-log_t))
        value = -float(setup.censoring._log_tail(np.asarray(x)))
    if not np.isfinite(x) or not np.isfinite(value):
        raise DomainError(f"quantile inversion failed at t=exp({log_t:.6g})")
    return value


def check_regular_variation_U(
    setup: CensoringSetup,
    t_grid: Optional[Sequence[float]] = None,
    x: float = 2.0,
) -> RegularVariationReport:
    """
    U(tx)/U(t) along t against x^κ, plus the trend of F̄/Ḡ at F̄⁻¹(1/t):
    with κ < 1 the censoring tail dominates, with κ > 1 the lifetime tail
    """
    kappa = setup.require_finite_kappa("check_regular_variation_U")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x!r}")
    t_values = [float(t) for t in (t_grid or DEFAULT_T_GRID)]
    if any(t <= 1.0 for t in t_values):
        raise DomainError("t_grid values must exceed 1")

    log_x = math.log(x)
    target = x**kappa
    ratios, disc, log_tail_ratio = [], [], []
    for t in t_values:
        log_t = math.log(t)
        log_u_t = _log_u(setup, log_t)
        ratio = math.exp(_log_u(setup, log_t + log_x) - log_u_t)
        ratios.append(ratio)
        disc.append(abs(ratio - target))
        log_tail_ratio.append(log_u_t - log_t)

    change = log_tail_ratio[-1] - log_tail_ratio[0]
    scale = max(1.0, abs(log_tail_ratio[0]))
    if change > 1e-6 * scale:
        trend = "increasing"
    elif change < -1e-6 * scale:
        trend = "decreasing"
    else:
        trend = "flat"

    if kappa < 1:
        dominance = "censoring"
    elif kappa > 1:
        dominance = "lifetime"
    else:
        dominance = "balanced"

    return RegularVariationReport(
        kappa=kappa,
        x=x,
        grid=t_values,
        discrepancies=disc,
        monotone_trend=is_non_increasing(disc, TREND_SLACK),
        ratios=ratios,
        target=target,
        log_tail_ratio=log_tail_ratio,
        tail_ratio_trend=trend,
        expected_dominance=dominance,
    )


def check_auxiliary_derivative_decay(
    model: DistributionBase, k_max: int = 20
) -> AuxiliaryDecayReport:
    """|f'(x)| along x = x0·2^k, k = 1..k_max (x0 = 1 when the family's x0 is 0)"""
    base = model.x0 if model.x0 > 0 else 1.0
    grid = [base * 2.0**k for k in range(1, k_max + 1)]
    values = [abs(float(v)) for v in model.auxiliary_derivative(np.array(grid))]
    return AuxiliaryDecayReport(
        family=model.label(),
        grid=grid,
        discrepancies=values,
        monotone_trend=is_non_increasing(values, 1e-15),
    )


def check_von_mises_representation(
    model: DistributionBase, x_grid: Optional[Sequence[float]] = None
) -> RepresentationReport:
    """
    Compare F̄(x) with F̄(x0)·exp{−∫_{x0}^x du/f(u)} in log space

    The default grid has 10 log-spaced points between x0 + 0.1 and x0 + 10.
    """
    x0 = model.x0
    grid = (
        [float(v) for v in x0 + np.geomspace(0.1, 10.0, 10)]
        if x_grid is None
        else [float(v) for v in x_grid]
    )
    if any(v <= x0 for v in grid):
        raise DomainError(f"representation points must exceed x0={x0!r}")

    log_tail_x0 = float(model.log_tail(x0))

    def inverse_aux(u: float) -> float:
        return float(1.0 / model._auxiliary(np.asarray(u)))

    errors = []
    previous, cumulative = x0, 0.0
    for x in grid:
        cumulative += integrate(
            inverse_aux,
            previous,
            x,
            f"hazard integral of {model.label()} on [{previous:.6g}, {x:.6g}]",
            epsabs=1e-13,
            epsrel=1e-13,
        ).value
        previous = x
        delta = (log_tail_x0 - cumulative) - float(model.log_tail(x))
        errors.append(abs(math.expm1(delta)))

    return RepresentationReport(
        family=model.label(),
        grid=grid,
        relative_errors=errors,
        max_relative_error=max(errors),
    )
