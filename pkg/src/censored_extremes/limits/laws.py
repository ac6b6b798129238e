"""
Limit laws of the level stretch, the stretch ratio and the exceedance count
"""

import math
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.special import gammaln, xlogy

from ..errors import DomainError
from ..models.law_models import LawKind
from ..numerics import bracket_upward, integrate, solve_decreasing

R_LAW_CUTOFF = 45.0
R_LAW_EPSABS = 1e-11
R_LAW_MAX_ERROR = 1e-8
MIXTURE_EPSABS = 1e-13


def _finite_kappa(kappa: float, what: str, positive: bool = False) -> float:
    kappa = float(kappa)
    if math.isnan(kappa) or math.isinf(kappa):
        raise DomainError(f"{what} is stated for finite κ, got {kappa!r}")
    if kappa < 0 or (positive and kappa == 0):
        bound = "> 0" if positive else ">= 0"
        raise DomainError(f"{what} needs κ {bound}, got {kappa!r}")
    return kappa


def _per_point(func, values):
    if np.ndim(values) == 0:
        return func(float(values))
    return np.array([func(float(v)) for v in np.asarray(values).reshape(-1)])


def l_law_cdf(kappa: float, x):
    """P[L <= x] = 1/(1 + κe^{−x}) for x >= 0, with atom 1/(1+κ) at 0"""
    kappa = _finite_kappa(kappa, "L-law")
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)) or np.any(x < 0):
        raise DomainError("L-law is supported on x >= 0")
    value = 1.0 / (1.0 + kappa * np.exp(-x))
    return float(value) if value.ndim == 0 else value


def l_law_tail(kappa: float, x):
    """P[L > x] = κ/(e^x + κ)"""
    kappa = _finite_kappa(kappa, "L-law")
    x = np.asarray(x, dtype=float)
    if np.any(np.isnan(x)) or np.any(x < 0):
        raise DomainError("L-law is supported on x >= 0")
    value = kappa / (np.exp(x) + kappa)
    return float(value) if value.ndim == 0 else value


def l_law_quantile(kappa: float, q):
    """Smallest x with P[L <= x] >= q; 0 inside the atom"""
    kappa = _finite_kappa(kappa, "L-law")
    q = np.asarray(q, dtype=float)
    if np.any((q < 0) | (q >= 1)):
        raise DomainError("quantile level must lie in [0, 1)")
    atom = 1.0 / (1.0 + kappa)
    with np.errstate(divide="ignore", invalid="ignore"):
        value = np.where(q <= atom, 0.0, np.log(q * kappa / (1.0 - q)))
    return float(value) if value.ndim == 0 else value


def _r_law_tail_point(kappa: float, x: float) -> float:
    if not 0.0 < x < 1.0:
        raise DomainError(f"ratio law is evaluated on (0, 1), got x={x!r}")
    c = 1.0 / (1.0 + kappa)
    power = 1.0 / (1.0 - x)
    # v = u^(1−x) removes the u^(−x) singularity at the origin
    v_star = ((1.0 + kappa) / kappa) ** (1.0 - x)
    upper = (1.0 + kappa) * R_LAW_CUTOFF

    def integrand(v: float) -> float:
        with np.errstate(over="ignore"):
            inner = kappa * c * np.power(v, power)
        return float(-np.expm1(-inner) * np.exp(-c * v))

    points = sorted({p for p in (1.0, v_star) if 0.0 < p < upper})
    result = integrate(
        integrand,
        0.0,
        upper,
        f"ratio law tail at κ={kappa!r}, x={x!r}",
        epsabs=R_LAW_EPSABS,
        max_error=R_LAW_MAX_ERROR,
        points=points,
    )
    return c * result.value


def r_law_tail(kappa: float, x):
    """
    Closed-form ratio-law tail

    ((1−x)/(1+κ))·∫_0^∞ (1 − e^{−κu/(1+κ)})·e^{−u^{1−x}/(1+κ)}·u^{−x} du, on
    0 < x < 1. For the limiting Gumbel pair (Y_u, Y_c) this equals
    P[Y_u < (1−x)·Y_c].
    """
    kappa = _finite_kappa(kappa, "ratio law", positive=True)
    return _per_point(lambda v: _r_law_tail_point(kappa, v), x)


def _r_ratio_tail_point(kappa: float, x: float) -> float:
    if not x > 0.0:
        raise DomainError(f"ratio-event tail is evaluated on x > 0, got {x!r}")
    c = 1.0 / (1.0 + kappa)

    def integrand(w: float) -> float:
        with np.errstate(over="ignore", divide="ignore"):
            log_value = -c * np.power(w, 1.0 - x) - kappa * c * w
        return float(np.exp(log_value))

    result = integrate(
        integrand,
        0.0,
        1.0,
        f"ratio-event tail at κ={kappa!r}, x={x!r}",
        epsabs=R_LAW_EPSABS,
        max_error=R_LAW_MAX_ERROR,
    )
    return kappa * c * result.value


def r_ratio_tail(kappa: float, x):
    """
    P[(M − Y_u)/M > x] for the limiting Gumbel pair, M = max(Y_u, Y_c)

    Strictly decreasing on (0, ∞) from (κ/(1+κ))(1 − e^{−1}) to 0.
    """
    kappa = _finite_kappa(kappa, "ratio-event law", positive=True)
    return _per_point(lambda v: _r_ratio_tail_point(kappa, v), x)


def r_ratio_tail_at_zero(kappa: float) -> float:
    kappa = _finite_kappa(kappa, "ratio-event law")
    return kappa / (1.0 + kappa) * (1.0 - math.exp(-1.0))


def count_law_pmf(kappa: float, j):
    """Geometric pmf (1 − p_κ)·p_κ^j with p_κ = κ/(1+κ)"""
    kappa = _finite_kappa(kappa, "count law")
    j = np.asarray(j)
    if np.any(j < 0) or not np.all(np.equal(np.mod(j, 1), 0)):
        raise DomainError("count law is supported on j = 0, 1, 2, ...")
    p = kappa / (1.0 + kappa)
    value = (1.0 - p) * np.power(p, j.astype(float))
    return float(value) if value.ndim == 0 else value


def count_law_tail(kappa: float, j: int) -> float:
    """P[N >= j] = p_κ^j"""
    kappa = _finite_kappa(kappa, "count law")
    return (kappa / (1.0 + kappa)) ** j


def _poisson_mixture_point(kappa: float, j: int) -> float:
    log_const = j * math.log(kappa) - gammaln(j + 1)
    rate = 1.0 + kappa

    def integrand(e: float) -> float:
        return float(np.exp(log_const + xlogy(j, e) - rate * e))

    mode = j / rate
    upper = mode + 60.0 * (math.sqrt(j) + 1.0) / rate
    what = f"Poisson mixture pmf at κ={kappa!r}, j={j}"
    total = 0.0
    if mode > 0:
        total += integrate(integrand, 0.0, mode, what, epsabs=MIXTURE_EPSABS).value
    total += integrate(integrand, mode, upper, what, epsabs=MIXTURE_EPSABS).value
    total += integrate(integrand, upper, np.inf, what, epsabs=MIXTURE_EPSABS).value
    return total


def poisson_mixture_pmf(kappa: float, j):
    """∫_0^∞ e^{−κe}(κe)^j/j!·e^{−e} de: a Poisson(κE) count, E unit exponential"""
    kappa = _finite_kappa(kappa, "Poisson mixture", positive=True)

    def point(v: float) -> float:
        if v < 0 or v != int(v):
            raise DomainError("Poisson mixture is supported on j = 0, 1, 2, ...")
        return _poisson_mixture_point(kappa, int(v))

    return _per_point(point, j)


def gumbel_marginal_cdf(t: float, x):
    """Λ^t(x) = exp(−t·e^{−x})"""
    if not t > 0 or math.isinf(t):
        raise DomainError(f"extremal-process time must be positive and finite, got {t!r}")
    value = np.exp(-t * np.exp(-np.asarray(x, dtype=float)))
    return float(value) if value.ndim == 0 else value


class LimitLaw(BaseModel):
    """Evaluatable limit law; build with the classmethod constructors"""

    model_config = ConfigDict(frozen=True)

    kind: LawKind
    kappa: Optional[float] = None
    t: Optional[float] = None

    @classmethod
    def l_law(cls, kappa: float) -> "LimitLaw":
        return cls(kind=LawKind.L, kappa=_finite_kappa(kappa, "L-law"))

    @classmethod
    def r_law(cls, kappa: float) -> "LimitLaw":
        return cls(kind=LawKind.R, kappa=_finite_kappa(kappa, "ratio law", True))

    @classmethod
    def r_ratio_law(cls, kappa: float) -> "LimitLaw":
        return cls(kind=LawKind.R_RATIO, kappa=_finite_kappa(kappa, "ratio law", True))

    @classmethod
    def geometric(cls, kappa: float) -> "LimitLaw":
        return cls(kind=LawKind.GEOMETRIC, kappa=_finite_kappa(kappa, "count law"))

    @classmethod
    def poisson_mixture(cls, kappa: float) -> "LimitLaw":
        return cls(
            kind=LawKind.POISSON_MIXTURE,
            kappa=_finite_kappa(kappa, "Poisson mixture", True),
        )

    @classmethod
    def gumbel_marginal(cls, t: float) -> "LimitLaw":
        gumbel_marginal_cdf(t, 0.0)
        return cls(kind=LawKind.GUMBEL_MARGINAL, t=float(t))

    @property
    def is_discrete(self) -> bool:
        return self.kind in (LawKind.GEOMETRIC, LawKind.POISSON_MIXTURE)

    @property
    def mean(self) -> float:
        if self.is_discrete:
            return self.kappa
        if self.kind == LawKind.GUMBEL_MARGINAL:
            return math.log(self.t) + np.euler_gamma
        if self.kind == LawKind.L:
            # E[L] = ∫ κ/(e^x + κ) dx
            return math.log1p(self.kappa)
        raise DomainError(f"mean of the {self.kind.value} law is not tabulated")

    def evaluate(self, x):
        """The value reported by the limits front-end: cdf, tail or pmf by kind"""
        if self.kind in (LawKind.R, LawKind.R_RATIO):
            return self.tail(x)
        if self.is_discrete:
            return self.pmf(x)
        return self.cdf(x)

    def cdf(self, x):
        if self.kind == LawKind.L:
            return l_law_cdf(self.kappa, x)
        if self.kind == LawKind.GUMBEL_MARGINAL:
            return gumbel_marginal_cdf(self.t, x)
        if self.is_discrete:
            j = np.floor(np.asarray(x, dtype=float))
            value = np.where(j < 0, 0.0, 1.0 - count_law_tail(self.kappa, 1) ** (j + 1))
            return float(value) if value.ndim == 0 else value
        return 1.0 - np.asarray(self.tail(x))

    def tail(self, x):
        if self.kind == LawKind.R:
            return r_law_tail(self.kappa, x)
        if self.kind == LawKind.R_RATIO:
            return r_ratio_tail(self.kappa, x)
        if self.kind == LawKind.L:
            return l_law_tail(self.kappa, x)
        return 1.0 - np.asarray(self.cdf(x))

    def pmf(self, j):
        if self.kind == LawKind.GEOMETRIC:
            return count_law_pmf(self.kappa, j)
        if self.kind == LawKind.POISSON_MIXTURE:
            return poisson_mixture_pmf(self.kappa, j)
        raise DomainError(f"the {self.kind.value} law has no pmf")

    def quantile(self, q: float) -> float:
        """Smallest x with cdf(x) >= q"""
        if not 0.0 <= q < 1.0:
            raise DomainError("quantile level must lie in [0, 1)")
        if self.kind == LawKind.L:
            return l_law_quantile(self.kappa, q)
        if self.kind == LawKind.GUMBEL_MARGINAL:
            if q == 0.0:
                return -math.inf
            return -math.log(-math.log(q) / self.t)
        if self.is_discrete:
            p = self.kappa / (1.0 + self.kappa)
            if p == 0.0:
                return 0.0
            return float(max(0, math.ceil(math.log1p(-q) / math.log(p) - 1.0 - 1e-12)))
        if self.kind == LawKind.R_RATIO:
            return self._ratio_quantile(q)
        raise DomainError("the integral-form ratio law is not monotone; no quantile")

    def _ratio_quantile(self, q: float) -> float:
        level = 1.0 - q
        if level >= r_ratio_tail_at_zero(self.kappa):
            return 0.0

        def objective(c: float) -> float:
            return _r_ratio_tail_point(self.kappa, c) - level

        lo = 1e-12
        hi = bracket_upward(objective, lo, "ratio-event quantile")
        return solve_decreasing(objective, lo, hi, "ratio-event quantile", xtol=1e-10)

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """Draws from the law using the explicit generator rng"""
        if self.kind == LawKind.L:
            return np.asarray(l_law_quantile(self.kappa, rng.random(size)))
        if self.kind == LawKind.GUMBEL_MARGINAL:
            return rng.gumbel(loc=math.log(self.t), size=size)
        if self.is_discrete:
            p = self.kappa / (1.0 + self.kappa)
            if p == 0.0:
                return np.zeros(size, dtype=int)
            # numpy counts trials up to the first success
            return rng.geometric(1.0 - p, size=size) - 1
        raise DomainError(f"sampling the {self.kind.value} law goes through the oracle")
