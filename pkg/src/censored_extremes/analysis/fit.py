"""
Goodness-of-fit of replication output against the limit laws
"""

import logging
import math
from typing import Literal, Optional, Sequence, Union

import numpy as np
from scipy import stats

from ..distributions import CensoringSetup
from ..errors import DomainError, InsufficientReplicationsError
from ..limits.asymptotics import success_prob
from ..limits.laws import count_law_pmf, gumbel_marginal_cdf, l_law_cdf
from ..models.report_models import FitReport, StretchTrendReport
from ..models.sample_models import ReplicationResult
from ..utils.trends import is_strictly_increasing

logger = logging.getLogger(__name__)

KS_MIN_REPS = 100
COUNT_MIN_REPS = 1000
COUNT_TRUNCATION = 1e-6
KS_NULL_COEFFICIENT = 1.36

Values = Union[ReplicationResult, Sequence[float], np.ndarray]


def null_ks_threshold(size: int, allowance: float) -> float:
    """1.36/√size plus an additive finite-n allowance"""
    return KS_NULL_COEFFICIENT / math.sqrt(size) + allowance


def _require(what: str, size: int, required: int) -> None:
    if size < required:
        raise InsufficientReplicationsError(what, size, required)


def _kappa_for(results: Values, kappa: Optional[float], what: str) -> float:
    if kappa is None:
        if not isinstance(results, ReplicationResult):
            raise DomainError(f"{what} needs κ when given raw values")
        kappa = results.setup.kappa
    if math.isnan(kappa) or math.isinf(kappa) or kappa < 0:
        raise DomainError(f"{what} needs a finite κ >= 0, got {kappa!r}")
    return float(kappa)


def ks_against_l_law(
    results: Values,
    kappa: Optional[float] = None,
    threshold: Optional[float] = None,
) -> FitReport:
    """
    Kolmogorov distance between the normalized stretches and 1/(1 + κe^{−x})

    The distance is taken on both sides of every empirical jump, so the atom
    1/(1+κ) at zero is compared with the share of zero stretches.
    """
    kappa = _kappa_for(results, kappa, "ks_against_l_law")
    if isinstance(results, ReplicationResult):
        if results.norming is None:
            raise DomainError("ks_against_l_law needs a normalized replication run")
        values = results.column("norm_L")
    else:
        values = np.asarray(results, dtype=float)
    size = int(values.size)
    _require("ks_against_l_law", size, KS_MIN_REPS)
    if np.any(values < 0):
        raise DomainError("normalized stretches must be >= 0")

    points, counts = np.unique(values, return_counts=True)
    after = np.cumsum(counts) / size
    before = after - counts / size
    model = l_law_cdf(kappa, points)
    model_left = np.where(points == 0.0, 0.0, model)
    distance = float(max(np.abs(after - model).max(), np.abs(before - model_left).max()))

    return FitReport(
        statistic="KS",
        observed=distance,
        threshold=null_ks_threshold(size, 0.005) if threshold is None else threshold,
        sample_size=size,
        label=f"L-law κ={kappa:g}",
        details={"atom_fraction": float(np.mean(values == 0.0))},
    )


def _counts(results: Values) -> np.ndarray:
    if isinstance(results, ReplicationResult):
        values = results.column("N_c_exceed")
    else:
        values = np.asarray(results, dtype=float)
    if np.any(values < 0) or np.any(values != np.floor(values)):
        raise DomainError("exceedance counts must be non-negative integers")
    return values.astype(np.int64)


def count_truncation_point(kappa: float) -> int:
    """Largest j whose geometric mass is at least 1e-6"""
    p = kappa / (1.0 + kappa)
    if p == 0.0:
        return 0
    return max(0, int(math.floor(math.log(COUNT_TRUNCATION / (1.0 - p)) / math.log(p))))


def fit_count_law(
    results: Values,
    kappa: Optional[float] = None,
    threshold: float = 0.05,
    min_reps: int = COUNT_MIN_REPS,
) -> FitReport:
    """
    Total variation between the empirical law of N_c(>M_u) and the geometric
    law with mean κ

    Cells beyond the last j with mass >= 1e-6 are lumped into one tail cell.
    """
    kappa = _kappa_for(results, kappa, "fit_count_law")
    if kappa == 0:
        raise DomainError("fit_count_law needs κ > 0")
    counts = _counts(results)
    size = int(counts.size)
    _require("fit_count_law", size, min_reps)

    top = count_truncation_point(kappa)
    j = np.arange(top + 1)
    empirical = np.bincount(np.minimum(counts, top + 1), minlength=top + 2) / size
    model = count_law_pmf(kappa, j)
    model_tail = max(0.0, 1.0 - float(model.sum()))
    distance = 0.5 * (
        float(np.abs(empirical[: top + 1] - model).sum())
        + abs(float(empirical[top + 1]) - model_tail)
    )

    return FitReport(
        statistic="TV",
        observed=distance,
        threshold=threshold,
        sample_size=size,
        label=f"geometric κ={kappa:g}",
        details={
            "empirical_p0": float(empirical[0]),
            "mean": float(counts.mean()),
            "truncation": float(top),
        },
    )


def chi_square_count_law(
    results: Values,
    kappa: Optional[float] = None,
    alpha: float = 0.05,
    pool_from: int = 8,
) -> FitReport:
    """
    Pearson chi-square of N_c(>M_u) against the geometric law

    Counts j >= pool_from share one cell; sparse upper cells (expected < 5) are
    merged into it.
    """
    kappa = _kappa_for(results, kappa, "chi_square_count_law")
    if kappa == 0:
        raise DomainError("chi_square_count_law needs κ > 0")
    if not 0 < alpha < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")
    counts = _counts(results)
    size = int(counts.size)
    _require("chi_square_count_law", size, KS_MIN_REPS)

    pooled = pool_from
    p = kappa / (1.0 + kappa)
    while pooled > 1 and size * p**pooled < 5.0:
        pooled -= 1
    observed = np.bincount(np.minimum(counts, pooled), minlength=pooled + 1).astype(float)
    expected = size * np.append(count_law_pmf(kappa, np.arange(pooled)), p**pooled)
    result = stats.chisquare(observed, expected)
    df = pooled

    return FitReport(
        statistic="chi-square",
        observed=float(result.statistic),
        threshold=float(stats.chi2.ppf(1.0 - alpha, df)),
        sample_size=size,
        label=f"geometric κ={kappa:g}, cells={pooled + 1}",
        p_value=float(result.pvalue),
    )


def check_np_limit(
    results: Values,
    setup: Optional[CensoringSetup] = None,
    threshold: Optional[float] = None,
) -> FitReport:
    """
    Kolmogorov distance between n·p(M_u) and the exponential law with mean κ/p_c

    Accepts a replication run, or raw n·p(M_u) values together with the setup.
    """
    if setup is None:
        if not isinstance(results, ReplicationResult):
            raise DomainError("check_np_limit needs the setup when given raw values")
        setup = results.setup
    setup.require_proper("check_np_limit")
    kappa = setup.require_finite_kappa("check_np_limit")
    if kappa == 0:
        raise DomainError("check_np_limit needs 0 < κ < ∞")

    if isinstance(results, ReplicationResult):
        m_u = results.column("M_u")
        values = results.n * np.asarray(success_prob(setup, m_u), dtype=float)
    else:
        values = np.asarray(results, dtype=float)
    size = int(values.size)
    _require("check_np_limit", size, KS_MIN_REPS)

    mean = kappa / setup.p_c
    result = stats.kstest(values, "expon", args=(0.0, mean))
    return FitReport(
        statistic="KS",
        observed=float(result.statistic),
        threshold=null_ks_threshold(size, 0.02) if threshold is None else threshold,
        sample_size=size,
        label=f"n·p(M_u) vs exponential mean {mean:g}",
        p_value=float(result.pvalue),
        details={"mean": float(values.mean())},
    )


def ks_against_gumbel_marginal(
    results: ReplicationResult,
    which: Literal["M", "M_u", "M_c"] = "M",
    threshold: Optional[float] = None,
) -> FitReport:
    """
    Kolmogorov distance between a normalized maximum and its extremal-process
    marginal exp(−t·e^{−x}), t = 1, 1/(1+κ) or κ/(1+κ)
    """
    if results.norming is None:
        raise DomainError("ks_against_gumbel_marginal needs a normalized replication run")
    kappa = results.setup.require_finite_kappa("ks_against_gumbel_marginal")
    t = {"M": 1.0, "M_u": 1.0 / (1.0 + kappa), "M_c": kappa / (1.0 + kappa)}[which]

    raw = results.column(which, valid_only=which != "M")
    raw = raw[~np.isnan(raw)]
    size = int(raw.size)
    _require("ks_against_gumbel_marginal", size, KS_MIN_REPS)
    values = (raw - results.norming.b_n) / results.norming.a_n

    result = stats.kstest(values, lambda x: gumbel_marginal_cdf(t, x))
    return FitReport(
        statistic="KS",
        observed=float(result.statistic),
        threshold=null_ks_threshold(size, 0.02) if threshold is None else threshold,
        sample_size=size,
        label=f"normalized {which} vs Λ^{t:g}",
        p_value=float(result.pvalue),
    )


def stretch_trend(
    runs: Sequence[ReplicationResult], epsilon: float = 0.1
) -> StretchTrendReport:
    """
    Share of replications with M = M_u and with norm_L > ε across increasing n

    For κ = 0 the first share rises towards 1 and the second falls.
    """
    if len(runs) < 2:
        raise DomainError("stretch_trend needs at least two runs")
    n_values = [run.n for run in runs]
    if not is_strictly_increasing(n_values):
        raise DomainError("stretch_trend needs runs ordered by increasing n")

    above = []
    for run in runs:
        if run.norming is None:
            raise DomainError("stretch_trend needs normalized replication runs")
        norm_l = run.column("norm_L")
        above.append(float(np.mean(norm_l > epsilon)) if norm_l.size else math.nan)
    no_stretch = [run.fraction_no_stretch() for run in runs]

    return StretchTrendReport(
        n_values=n_values,
        fraction_no_stretch=no_stretch,
        fraction_above_epsilon=above,
        epsilon=epsilon,
        increasing=is_strictly_increasing(no_stretch),
    )
