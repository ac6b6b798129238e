"""
Standard normal tail functions evaluated without underflow

Everything is routed through scipy.special so the far tail (Φ̄ below 1e-300)
stays accurate in log space.
"""

import numpy as np
from scipy.special import erfcx, log_ndtr, ndtr, ndtri_exp

_LOG_SQRT_2PI = 0.5 * np.log(2.0 * np.pi)
_SQRT_HALF_PI = np.sqrt(np.pi / 2.0)


def norm_sf(z):
    """Φ̄(z)"""
    return ndtr(-np.asarray(z, dtype=float))


def log_norm_sf(z):
    """log Φ̄(z)"""
    return log_ndtr(-np.asarray(z, dtype=float))


def log_norm_pdf(z):
    """log φ(z)"""
    z = np.asarray(z, dtype=float)
    return -0.5 * z * z - _LOG_SQRT_2PI


def mills_ratio(z):
    """Φ̄(z)/φ(z), via the scaled complementary error function"""
    return _SQRT_HALF_PI * erfcx(np.asarray(z, dtype=float) / np.sqrt(2.0))


def mills_ratio_derivative(z):
    """d/dz of Φ̄(z)/φ(z), equal to z·m(z) − 1"""
    z = np.asarray(z, dtype=float)
    return z * mills_ratio(z) - 1.0


def norm_isf_from_log(log_q):
    """z with log Φ̄(z) = log_q"""
    return -ndtri_exp(np.asarray(log_q, dtype=float))
