"""
Kaplan-Meier product-limit estimator and its terminal flat segment
"""

from typing import NamedTuple, Union

import numpy as np

from ..errors import DomainError
from ..models.sample_models import KMECurve, SurvivalSample


class LevelStretch(NamedTuple):
    length: float
    exceed_count: int
    no_uncensored: bool


def _sample_stretch(sample: SurvivalSample) -> LevelStretch:
    if sample.n == 0:
        raise DomainError("level stretch needs at least one observation")
    largest = float(sample.times.max())
    uncensored = sample.times[~sample.censored]
    censored = sample.times[sample.censored]
    if uncensored.size == 0:
        return LevelStretch(largest, int(censored.size), True)
    m_u = float(uncensored.max())
    return LevelStretch(largest - m_u, int(np.count_nonzero(censored > m_u)), False)


def level_stretch(data: Union[KMECurve, SurvivalSample]) -> LevelStretch:
    """
    (M − M_u, number of censored times above M_u, M_u absent)

    Without uncensored observations the length is M and every censored time
    is counted.
    """
    if isinstance(data, KMECurve):
        return LevelStretch(
            data.level_stretch, data.exceed_count, data.largest_uncensored is None
        )
    return _sample_stretch(data)


def fit_kme(sample: SurvivalSample) -> KMECurve:
    """
    Product-limit estimate Π(1 − d_j/r_j) over the distinct uncensored times

    A censored time equal to an uncensored one is still at risk at that time.
    """
    if sample.n == 0:
        raise DomainError("fit_kme needs at least one observation")

    ordered = np.sort(sample.times)
    jump_times, events = np.unique(sample.times[~sample.censored], return_counts=True)
    at_risk = sample.n - np.searchsorted(ordered, jump_times, side="left")
    survivor = np.cumprod(1.0 - events / at_risk)

    stretch = _sample_stretch(sample)
    uncensored = sample.times[~sample.censored]
    return KMECurve(
        jump_times=jump_times,
        survivor_values=survivor,
        at_risk=at_risk,
        events=events,
        plateau_level=float(survivor[-1]) if survivor.size else 1.0,
        level_stretch=stretch.length,
        exceed_count=stretch.exceed_count,
        largest_observation=float(ordered[-1]),
        largest_uncensored=float(uncensored.max()) if uncensored.size else None,
        n=sample.n,
    )
