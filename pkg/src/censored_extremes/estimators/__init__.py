"""
Product-limit estimation
"""

from .kaplan_meier import LevelStretch, fit_kme, level_stretch

__all__ = ["LevelStretch", "fit_kme", "level_stretch"]
