"""
Method-of-moments estimate of κ from the exceedance count N_c(>M_u)
"""

import logging
from typing import Sequence, Union

import numpy as np

from ..errors import DomainError, InsufficientReplicationsError
from ..models.sample_models import ExtremeStats, ReplicationResult, SurvivalSample
from ..simulation.extremes import extreme_stats

logger = logging.getLogger(__name__)


def estimate_kappa(
    data: Union[ReplicationResult, SurvivalSample, ExtremeStats, Sequence[int], np.ndarray],
) -> float:
    """
    κ̂ = mean of N_c(>M_u)

    A replication run averages over the replications that have an uncensored
    observation; a single sample returns its own count.
    """
    if isinstance(data, SurvivalSample):
        data = extreme_stats(data)
    if isinstance(data, ExtremeStats):
        if not data.has_uncensored:
            raise DomainError("estimate_kappa needs at least one uncensored observation")
        return float(data.n_c_exceed)

    if isinstance(data, ReplicationResult):
        counts = data.column("N_c_exceed")
        logger.debug(
            "Estimating κ from %d of %d replications", counts.size, data.rep_count
        )
    else:
        counts = np.asarray(data, dtype=float)
    if counts.size == 0:
        raise InsufficientReplicationsError("estimate_kappa", 0, 1)
    if np.any(counts < 0):
        raise DomainError("exceedance counts must be non-negative")
    return float(counts.mean())
