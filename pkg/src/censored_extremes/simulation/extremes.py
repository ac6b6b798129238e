"""
Extreme statistics of one sample
"""

from typing import Optional

import numpy as np

from ..errors import DomainError
from ..models.law_models import NormingConstants
from ..models.sample_models import ExtremeStats, SurvivalSample
from .sampling import decoupage_split


def extreme_stats(
    sample: SurvivalSample, norming: Optional[NormingConstants] = None
) -> ExtremeStats:
    """
    M_u, M_c, M, the counts and the exceedance count N_c(>M_u)

    Without uncensored observations M_u is absent and every censored time counts
    as an exceedance. norm_L needs norming constants; norm_R only needs M_u and
    M > 0. An empty censored subsequence leaves M_c absent.
    """
    if sample.n == 0:
        raise DomainError("extreme_stats needs at least one observation")

    uncensored, censored = decoupage_split(sample)
    m_u = float(uncensored.max()) if uncensored.size else None
    m_c = float(censored.max()) if censored.size else None
    m = max(v for v in (m_u, m_c) if v is not None)

    if m_u is None:
        n_c_exceed = int(censored.size)
        norm_l = norm_r = None
    else:
        n_c_exceed = int(np.count_nonzero(censored > m_u))
        norm_l = None if norming is None else (m - m_u) / norming.a_n
        norm_r = (m - m_u) / m if m > 0 else None

    return ExtremeStats(
        m_u=m_u,
        m_c=m_c,
        m=m,
        n_u=int(uncensored.size),
        n_c=int(censored.size),
        n_c_exceed=n_c_exceed,
        norm_l=norm_l,
        norm_r=norm_r,
    )
