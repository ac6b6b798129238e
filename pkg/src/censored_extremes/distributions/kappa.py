"""
Balance parameter κ = lim f/g and event probabilities p_u, p_c
"""

import math
from typing import TYPE_CHECKING, NamedTuple, Optional, Tuple

from ..errors import UnsupportedPairError
from .families import DistributionBase, Exponential, LogNormal, NormalTail, Weibull
from .observed import tail_integral

if TYPE_CHECKING:
    from .setup import CensoringSetup


class EventProbabilities(NamedTuple):
    p_u: float
    p_c: float


def weibull_parameters(model: DistributionBase) -> Optional[Tuple[float, float]]:
    """(shape, scale) for Weibull-type tails; the exponential is shape 1"""
    if isinstance(model, Exponential):
        return 1.0, model.rate
    if isinstance(model, Weibull):
        return model.shape, model.scale
    return None


def kappa_of(lifetime: DistributionBase, censoring: DistributionBase) -> float:
    """
    Analytic κ for a supported lifetime/censoring pair, math.inf when f/g → ∞

    Weibull(α, λ) against Weibull(β, μ) gives 0, μ/λ or ∞ as β <, =, > α.
    LogNormal and NormalTail pairs give σ_F²/σ_G², the limit of the ratio of
    their auxiliary functions. A Weibull-type lifetime under lognormal
    censoring gives 0, the interchanged roles give ∞.
    """
    wf = weibull_parameters(lifetime)
    wg = weibull_parameters(censoring)

    if wf is not None and wg is not None:
        (alpha, lam), (beta, mu) = wf, wg
        if beta < alpha:
            return 0.0
        if beta > alpha:
            return math.inf
        return mu / lam

    if isinstance(lifetime, LogNormal) and isinstance(censoring, LogNormal):
        return lifetime.sigma**2 / censoring.sigma**2

    if isinstance(lifetime, NormalTail) and isinstance(censoring, NormalTail):
        return lifetime.sigma**2 / censoring.sigma**2

    if wf is not None and isinstance(censoring, LogNormal):
        return 0.0

    if isinstance(lifetime, LogNormal) and wg is not None:
        return math.inf

    raise UnsupportedPairError(lifetime.label(), censoring.label())


def uncensored_probability(
    lifetime: DistributionBase, censoring: DistributionBase
) -> float:
    """P[T* <= U] = ∫ Ḡ dF for a proper lifetime distribution"""
    wf = weibull_parameters(lifetime)
    wg = weibull_parameters(censoring)
    if wf is not None and wg is not None and wf[0] == wg[0]:
        return wf[1] / (wf[1] + wg[1])
    if lifetime == censoring:
        return 0.5
    lower = min(lifetime.support_lower, censoring.support_lower)
    return tail_integral(lifetime, censoring, lower, "p_u")


def event_probabilities(
    setup: "CensoringSetup", susceptible: bool = False
) -> EventProbabilities:
    """
    (p_u, p_c) for one observation

    With a cure fraction p < 1 the observation-level values are
    (p·p_u, 1 − p·p_u); susceptible=True returns the values conditional on a
    proper lifetime instead.
    """
    p_u = uncensored_probability(setup.lifetime, setup.censoring)
    if not susceptible:
        p_u *= setup.cure_fraction
    return EventProbabilities(p_u, 1.0 - p_u)
