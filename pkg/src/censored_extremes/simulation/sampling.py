"""
Sampling of censored observations and the découpage into uncensored and
censored subsequences
"""

from typing import NamedTuple

import numpy as np

from ..distributions import CensoringSetup
from ..errors import DomainError
from ..models.sample_models import SurvivalSample


class DecoupageSplit(NamedTuple):
    uncensored: np.ndarray
    censored: np.ndarray


def draw_sample(
    setup: CensoringSetup, n: int, rng: np.random.Generator
) -> SurvivalSample:
    """
    Draw n pairs (min(T*, U), T* > U)

    Lifetimes are drawn first, then censoring times, then the immune mask when
    cure_fraction < 1. Immune lifetimes are +inf and therefore always censored.
    Ties count as uncensored.
    """
    if n < 1:
        raise DomainError(f"draw_sample needs n >= 1, got {n}")

    lifetimes = setup.lifetime.sample(rng, n)
    censoring = setup.censoring.sample(rng, n)
    if not setup.is_proper:
        immune = rng.random(n) >= setup.cure_fraction
        lifetimes = np.where(immune, np.inf, lifetimes)

    return SurvivalSample(
        times=np.minimum(lifetimes, censoring),
        censored=lifetimes > censoring,
    )


def decoupage_split(sample: SurvivalSample) -> DecoupageSplit:
    """Order-preserving partition of the observed times by the censoring flag"""
    return DecoupageSplit(
        uncensored=sample.times[~sample.censored],
        censored=sample.times[sample.censored],
    )
