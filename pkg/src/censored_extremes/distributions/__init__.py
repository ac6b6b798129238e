"""
Distribution families, censoring setups and the balance parameter κ
"""

from .families import (
    DistributionBase,
    DistributionModel,
    Exponential,
    LogNormal,
    NormalTail,
    Weibull,
)
from .kappa import EventProbabilities, event_probabilities, kappa_of
from .observed import (
    censored_tail,
    censored_tail_ratio,
    observed_auxiliary,
    observed_log_tail,
    observed_tail,
    uncensored_tail,
    uncensored_tail_ratio,
)
from .parsing import FAMILY_SYNTAX, as_distribution, parse_family
from .setup import CensoringSetup

__all__ = [
    "DistributionBase",
    "DistributionModel",
    "Exponential",
    "LogNormal",
    "NormalTail",
    "Weibull",
    "EventProbabilities",
    "event_probabilities",
    "kappa_of",
    "censored_tail",
    "censored_tail_ratio",
    "observed_auxiliary",
    "observed_log_tail",
    "observed_tail",
    "uncensored_tail",
    "uncensored_tail_ratio",
    "FAMILY_SYNTAX",
    "as_distribution",
    "parse_family",
    "CensoringSetup",
]
