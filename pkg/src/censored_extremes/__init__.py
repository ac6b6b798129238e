"""
censored-extremes: extremes of censored and uncensored lifetimes

Simulation engine, limit-law evaluators and goodness-of-fit checks for the
largest uncensored and censored observations under i.i.d. right censoring.
"""

__version__ = "1.0.0"
