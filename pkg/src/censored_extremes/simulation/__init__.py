"""
Monte Carlo engine for the i.i.d. censoring model
"""

from .extremes import extreme_stats
from .replications import run_replications
from .sampling import DecoupageSplit, decoupage_split, draw_sample

__all__ = [
    "extreme_stats",
    "run_replications",
    "DecoupageSplit",
    "decoupage_split",
    "draw_sample",
]
