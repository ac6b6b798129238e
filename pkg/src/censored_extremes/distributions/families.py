"""
Von Mises distribution families with analytic tails

Each family exposes the tail F̄, its logarithm, the density, the hazard, the
auxiliary function f = F̄/density (reciprocal hazard) and its derivative, the
inverse tail and an inverse-tail sampler. Public methods check their domain;
the underscored variants are used internally where the caller already has.
"""

from typing import Annotated, ClassVar, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.special import xlogy

from ..errors import DomainError
from ..numerics import (
    log_norm_pdf,
    log_norm_sf,
    mills_ratio,
    mills_ratio_derivative,
    norm_isf_from_log,
)


def _scalar_or_array(value):
    return float(value) if np.ndim(value) == 0 else value


class DistributionBase(BaseModel):
    """Common behaviour of the supported families"""

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    support_lower: ClassVar[float] = 0.0

    # --- domain-checked API -------------------------------------------------

    def tail(self, x):
        """F̄(x)"""
        return _scalar_or_array(np.exp(self.log_tail(x)))

    def log_tail(self, x):
        """log F̄(x)"""
        x = self._check_support(x)
        with np.errstate(divide="ignore"):
            return _scalar_or_array(self._log_tail(x))

    def cdf(self, x):
        """F(x)"""
        return _scalar_or_array(-np.expm1(self.log_tail(x)))

    def density(self, x):
        """−dF̄/dx"""
        x = self._check_support(x)
        with np.errstate(divide="ignore", over="ignore"):
            return _scalar_or_array(np.exp(self._log_density(x)))

    def log_density(self, x):
        x = self._check_support(x)
        with np.errstate(divide="ignore", over="ignore"):
            return _scalar_or_array(self._log_density(x))

    def hazard(self, x):
        """density/tail"""
        x = self._check_support(x)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            return _scalar_or_array(np.exp(self._log_density(x) - self._log_tail(x)))

    def auxiliary(self, x):
        """Reciprocal hazard f(x) of the von Mises representation, for x > x0"""
        return _scalar_or_array(self._auxiliary(self._check_above_x0(x)))

    def auxiliary_derivative(self, x):
        """f'(x), which tends to 0 for a von Mises function"""
        return _scalar_or_array(self._auxiliary_derivative(self._check_above_x0(x)))

    def isf(self, q):
        """Inverse tail: x with F̄(x) = q, for q in (0, 1]"""
        q = np.asarray(q, dtype=float)
        if np.any((q <= 0) | (q > 1)):
            raise DomainError(f"{self.label()}: tail level must lie in (0, 1]")
        return _scalar_or_array(self._isf_from_log(np.log(q)))

    def log_isf(self, log_q):
        """Inverse tail addressed by log q, usable far below 1e-300"""
        log_q = np.asarray(log_q, dtype=float)
        if np.any(log_q > 0) or np.any(np.isnan(log_q)):
            raise DomainError(f"{self.label()}: log tail level must be <= 0")
        return _scalar_or_array(self._isf_from_log(log_q))

    def quantile(self, p):
        """Inverse cdf"""
        p = np.asarray(p, dtype=float)
        if np.any((p < 0) | (p >= 1)):
            raise DomainError(f"{self.label()}: probability must lie in [0, 1)")
        return _scalar_or_array(self._isf_from_log(np.log1p(-p)))

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Draw size lifetimes using the explicit generator rng"""
        return self._sample(rng, size)

    # --- helpers ---------------------------------------------------------------

    def _check_support(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(np.isnan(x)) or np.any(x < self.support_lower):
            raise DomainError(f"{self.label()}: x outside support")
        return x

    def _check_above_x0(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(np.isnan(x)) or np.any(x <= self.x0):
            raise DomainError(f"{self.label()}: auxiliary needs x > x0={self.x0!r}")
        return x

    def _sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        # inverse-cdf on the tail scale; 1 - U lies in (0, 1]
        return np.asarray(self._isf_from_log(np.log1p(-rng.random(size))))

    def label(self) -> str:
        """Config-string form, e.g. exp(rate=1.0)"""
        params = self.model_dump(exclude={"family"})
        if params.get("x0") == type(self).model_fields["x0"].default:
            params.pop("x0")
        inner = ",".join(f"{k}={v!r}" for k, v in params.items())
        return f"{self.family}({inner})"

    def __str__(self) -> str:
        return self.label()


class Exponential(DistributionBase):
    """F̄(x) = exp(−rate·x) on [0, ∞)"""

    family: Literal["exp"] = "exp"
    rate: float = Field(..., gt=0, description="Rate λ")
    x0: float = Field(0.0, ge=0, description="Lower end of the representation interval")

    def _log_tail(self, x):
        return -self.rate * x

    def _log_density(self, x):
        return np.log(self.rate) - self.rate * x

    def _auxiliary(self, x):
        return np.full_like(x, 1.0 / self.rate, dtype=float)

    def _auxiliary_derivative(self, x):
        return np.zeros_like(x, dtype=float)

    def _isf_from_log(self, log_q):
        return -log_q / self.rate


class Weibull(DistributionBase):
    """F̄(x) = exp(−scale·x^shape) on [0, ∞)"""

    family: Literal["weibull"] = "weibull"
    shape: float = Field(..., gt=0, description="Shape α")
    scale: float = Field(..., gt=0, description="Scale λ multiplying x^α")
    x0: float = Field(1.0, gt=0, description="Lower end of the representation interval")

    def _log_tail(self, x):
        return -self.scale * np.power(x, self.shape)

    def _log_density(self, x):
        a = self.shape
        return np.log(self.scale * a) + xlogy(a - 1.0, x) - self.scale * np.power(x, a)

    def _auxiliary(self, x):
        return np.power(x, 1.0 - self.shape) / (self.scale * self.shape)

    def _auxiliary_derivative(self, x):
        a = self.shape
        return (1.0 - a) / (self.scale * a) * np.power(x, -a)

    def _isf_from_log(self, log_q):
        return np.power(-log_q / self.scale, 1.0 / self.shape)


class LogNormal(DistributionBase):
    """F̄(x) = Φ̄(log x / σ) on (0, ∞), location fixed at 0"""

    family: Literal["lognormal"] = "lognormal"
    sigma: float = Field(..., gt=0, description="Log-scale standard deviation σ")
    x0: float = Field(1.0, gt=0, description="Lower end of the representation interval")

    def _z(self, x):
        with np.errstate(divide="ignore"):
            return np.log(x) / self.sigma

    def _log_tail(self, x):
        return log_norm_sf(self._z(x))

    def _log_density(self, x):
        positive = x > 0
        safe = np.where(positive, x, 1.0)
        value = log_norm_pdf(np.log(safe) / self.sigma) - np.log(safe * self.sigma)
        return np.where(positive, value, -np.inf)

    def _auxiliary(self, x):
        return x * self.sigma * mills_ratio(self._z(x))

    def _auxiliary_derivative(self, x):
        z = self._z(x)
        return self.sigma * mills_ratio(z) + mills_ratio_derivative(z)

    def _isf_from_log(self, log_q):
        return np.exp(self.sigma * norm_isf_from_log(log_q))

    def _sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return np.exp(self.sigma * rng.standard_normal(size))


class NormalTail(DistributionBase):
    """F̄(x) = Φ̄(x / σ) on the whole real line"""

    support_lower: ClassVar[float] = -np.inf

    family: Literal["normaltail"] = "normaltail"
    sigma: float = Field(..., gt=0, description="Scale σ")
    x0: float = Field(1.0, gt=0, description="Lower end of the representation interval")

    def _log_tail(self, x):
        return log_norm_sf(x / self.sigma)

    def _log_density(self, x):
        return log_norm_pdf(x / self.sigma) - np.log(self.sigma)

    def _auxiliary(self, x):
        return self.sigma * mills_ratio(x / self.sigma)

    def _auxiliary_derivative(self, x):
        return mills_ratio_derivative(x / self.sigma)

    def _isf_from_log(self, log_q):
        return self.sigma * norm_isf_from_log(log_q)

    def _sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return self.sigma * rng.standard_normal(size)


DistributionModel = Annotated[
    Union[Exponential, Weibull, LogNormal, NormalTail],
    Field(discriminator="family"),
]
