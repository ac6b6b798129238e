"""
Verification presets: the acceptance experiments as FitReport rows
"""

import logging
import math
import time
from typing import Callable, Dict, List, Optional

import numpy as np

from .analysis import (
    check_np_limit,
    estimate_kappa,
    fit_count_law,
    ks_against_l_law,
    stretch_trend,
)
from .distributions import CensoringSetup
from .distributions.kappa import weibull_parameters
from .errors import ConfigError, DomainError
from .limits import (
    check_converse,
    check_r_law,
    check_tail_asymptotics,
    count_law_pmf,
    norming_constants,
    poisson_mixture_pmf,
)
from .models import PRESETS, FitReport, VerificationSummary, VerifyPreset
from .simulation import run_replications
from .utils.trends import count_increases

logger = logging.getLogger(__name__)

POISSON_KAPPAS = (0.25, 1.0, 4.0)
NORMING_SIZES = (100, 10_000, 1_000_000)
NORMING_PAIRS = (
    ("exp(rate=1)", "exp(rate=1)"),
    ("exp(rate=1)", "exp(rate=2)"),
    ("weibull(shape=2,scale=1)", "weibull(shape=2,scale=1)"),
    ("weibull(shape=2,scale=1)", "weibull(shape=2,scale=2)"),
)
COMPLEMENT_PAIRS = (
    ("exp(rate=1)", "exp(rate=1)"),
    ("exp(rate=1)", "exp(rate=2)"),
    ("weibull(shape=2,scale=1)", "weibull(shape=2,scale=2)"),
    ("lognormal(sigma=1)", "lognormal(sigma=1)"),
)
COMPLEMENT_TOLERANCE = 1e-8
DEFAULT_CUSTOM_TOLERANCES = {
    "atom": 0.025,
    "ks": 0.05,
    "tv": 0.05,
    "np_limit": 0.05,
    "kappa": 0.1,
}


def _distance_report(
    statistic: str, label: str, value: float, target: float, tolerance: float, size: int
) -> FitReport:
    return FitReport(
        statistic=statistic,
        observed=abs(value - target),
        threshold=tolerance,
        sample_size=size,
        label=label,
        details={"value": value, "target": target},
    )


def _setup(preset: VerifyPreset) -> CensoringSetup:
    return CensoringSetup(lifetime=preset.lifetime, censoring=preset.censoring)


def limit_law_checks(
    setup: CensoringSetup,
    n: int,
    reps: int,
    seed: int,
    tolerances: Dict[str, float],
    threads: Optional[int] = None,
) -> List[FitReport]:
    """Atom, L-law, count law, n·p(M_u) limit and κ̂ for one replication run"""
    kappa = setup.kappa
    results = run_replications(setup, n, reps, seed, threads=threads)
    size = len(results.valid_stats)
    reports = [
        _distance_report(
            "atom-fraction",
            "share of M = M_u",
            results.fraction_no_stretch(),
            1.0 / (1.0 + kappa),
            tolerances["atom"],
            size,
        ),
        ks_against_l_law(results, threshold=tolerances["ks"]),
    ]
    if kappa > 0:
        reports.append(fit_count_law(results, threshold=tolerances["tv"]))
        reports.append(check_np_limit(results, threshold=tolerances["np_limit"]))
    reports.append(
        _distance_report(
            "abs-error",
            "κ̂ from mean exceedance count",
            estimate_kappa(results),
            kappa,
            tolerances["kappa"],
            size,
        )
    )
    return reports


def _exp_kappa1(preset: VerifyPreset, threads: Optional[int]) -> List[FitReport]:
    return limit_law_checks(
        _setup(preset),
        preset.n_values[0],
        preset.reps,
        preset.seed,
        preset.tolerances,
        threads,
    )


def _exp_kappa2(preset: VerifyPreset, threads: Optional[int]) -> List[FitReport]:
    setup = _setup(preset)
    results = run_replications(
        setup, preset.n_values[0], preset.reps, preset.seed, threads=threads
    )
    counts = results.column("N_c_exceed")
    return [
        fit_count_law(results, threshold=preset.tolerances["tv"]),
        _distance_report(
            "mean",
            "mean exceedance count",
            float(counts.mean()),
            setup.kappa,
            preset.tolerances["mean"],
            int(counts.size),
        ),
    ]


def _weibull_kappa0(preset: VerifyPreset, threads: Optional[int]) -> List[FitReport]:
    setup = _setup(preset)
    runs = [
        run_replications(setup, n, preset.reps, preset.seed + i, threads=threads)
        for i, n in enumerate(preset.n_values)
    ]
    trend = stretch_trend(runs)
    fractions = trend.fraction_no_stretch
    violations = len(fractions) - 1 - count_increases(fractions)
    return [
        FitReport(
            statistic="trend",
            observed=float(violations),
            threshold=0.0,
            sample_size=preset.reps,
            label="share of M = M_u strictly increasing in n",
            details={f"n={n}": f for n, f in zip(trend.n_values, fractions)},
        )
    ]


def _r_law(preset: VerifyPreset, threads: Optional[int]) -> List[FitReport]:
    report = check_r_law(
        draws=preset.draws, seed=preset.seed, tolerance=preset.tolerances["r_law"]
    )
    return [
        FitReport(
            statistic="abs-error",
            observed=report.max_discrepancy,
            threshold=report.tolerance,
            sample_size=report.draws,
            label="ratio law quadrature vs Gumbel-pair oracle",
            details={"systematic_gap": float(report.systematic_gap)},
        )
    ]


def closed_form_norming(setup: CensoringSetup, n: int) -> tuple:
    """b_n, a_n for Weibull-type pairs of equal shape, H̄ = exp(−(λ+μ)x^α)"""
    alpha, lam = weibull_parameters(setup.lifetime)
    _, mu = weibull_parameters(setup.censoring)
    rate = lam + mu
    b_n = (math.log(n) / rate) ** (1.0 / alpha)
    return b_n, b_n ** (1.0 - alpha) / (rate * alpha)


def _identities(preset: VerifyPreset, threads: Optional[int]) -> List[FitReport]:
    tol = preset.tolerances
    reports = []

    j = np.arange(11)
    poisson_gap = max(
        float(np.abs(poisson_mixture_pmf(k, j) - count_law_pmf(k, j)).max())
        for k in POISSON_KAPPAS
    )
    reports.append(
        FitReport(
            statistic="abs-error",
            observed=poisson_gap,
            threshold=tol["poisson"],
            sample_size=len(POISSON_KAPPAS) * j.size,
            label="Poisson mixture equals the geometric pmf",
        )
    )

    norming_gap = 0.0
    for lifetime, censoring in NORMING_PAIRS:
        setup = CensoringSetup(lifetime=lifetime, censoring=censoring)
        for n in NORMING_SIZES:
            solved = norming_constants(setup, n)
            b_n, a_n = closed_form_norming(setup, n)
            norming_gap = max(
                norming_gap, abs(solved.b_n / b_n - 1.0), abs(solved.a_n / a_n - 1.0)
            )
    reports.append(
        FitReport(
            statistic="rel-error",
            observed=norming_gap,
            threshold=tol["norming"],
            sample_size=len(NORMING_PAIRS) * len(NORMING_SIZES),
            label="norming constants against closed forms",
        )
    )

    exp_gap = 0.0
    for lifetime, censoring in NORMING_PAIRS[:2]:
        report = check_tail_asymptotics(CensoringSetup(lifetime=lifetime, censoring=censoring))
        exp_gap = max(exp_gap, max(report.discrepancies))
    reports.append(
        FitReport(
            statistic="abs-error",
            observed=exp_gap,
            threshold=tol["tail"],
            sample_size=2,
            label="uncensored tail ratio equals 1/(1+κ) for exponential pairs",
        )
    )

    complement_gap = max(
        check_tail_asymptotics(
            CensoringSetup(lifetime=lifetime, censoring=censoring)
        ).complement_error
        for lifetime, censoring in COMPLEMENT_PAIRS
    )
    reports.append(
        FitReport(
            statistic="abs-error",
            observed=complement_gap,
            threshold=COMPLEMENT_TOLERANCE,
            sample_size=len(COMPLEMENT_PAIRS),
            label="uncensored and censored tail ratios sum to 1",
        )
    )

    kappa_zero = check_tail_asymptotics(
        CensoringSetup(
            lifetime="weibull(shape=2,scale=1)", censoring="weibull(shape=1,scale=1)"
        )
    )
    ratios = kappa_zero.censored_ratio
    reports.append(
        FitReport(
            statistic="trend",
            observed=float(count_increases(ratios)),
            threshold=0.0,
            sample_size=len(ratios),
            label="censored tail ratio decreasing for κ = 0",
        )
    )

    converse = check_converse(
        CensoringSetup(lifetime="exp(rate=1)", censoring="exp(rate=2)")
    )
    reports.append(
        FitReport(
            statistic="abs-error",
            observed=converse.final_discrepancy,
            threshold=tol["converse"],
            sample_size=len(converse.grid),
            label="(1 − k)/k recovers f/g at the deepest grid point",
        )
    )
    return reports


_RUNNERS: Dict[str, Callable[[VerifyPreset, Optional[int]], List[FitReport]]] = {
    "exp-kappa1": _exp_kappa1,
    "exp-kappa2": _exp_kappa2,
    "weibull-kappa0": _weibull_kappa0,
    "r-law": _r_law,
    "identities": _identities,
}


def _with_overrides(preset: VerifyPreset, overrides: Dict[str, float]) -> VerifyPreset:
    if not overrides:
        return preset
    draws = overrides.get("draws")
    tolerances = {**preset.tolerances}
    tolerances.update({k: v for k, v in overrides.items() if k != "draws"})
    update = {"tolerances": tolerances}
    if draws is not None:
        update["draws"] = int(draws)
    return preset.model_copy(update=update)


def run_preset(
    name: str,
    threads: Optional[int] = None,
    overrides: Optional[Dict[str, float]] = None,
) -> VerificationSummary:
    """
    Run a named preset; composite presets run their parts in order

    overrides replaces tolerances by key, and the oracle size through 'draws'.
    """
    preset = PRESETS.get(name)
    if preset is None:
        raise ConfigError("preset", f"unknown preset {name!r} (known: {', '.join(PRESETS)})")

    started = time.perf_counter()
    logger.info("Running verify preset %s", name)
    reports: List[FitReport] = []
    if preset.includes:
        for part in preset.includes:
            part_overrides = {**preset.overrides.get(part, {}), **(overrides or {})}
            reports.extend(run_preset(part, threads, part_overrides).reports)
    else:
        preset = _with_overrides(preset, overrides or {})
        reports = _RUNNERS[name](preset, threads)

    summary = VerificationSummary(
        preset=name, reports=reports, elapsed_seconds=time.perf_counter() - started
    )
    for report in summary.failed():
        logger.warning(
            "Check failed in %s: %s (%s %.4g > %.4g)",
            name,
            report.label,
            report.statistic,
            report.observed,
            report.threshold,
        )
    logger.info(
        "Preset %s finished in %.1fs: %d/%d checks passed",
        name,
        summary.elapsed_seconds,
        len(reports) - len(summary.failed()),
        len(reports),
    )
    return summary


def run_custom(
    setup: CensoringSetup,
    n: int,
    reps: int,
    seed: int,
    tolerances: Optional[Dict[str, float]] = None,
    threads: Optional[int] = None,
) -> VerificationSummary:
    """Limit-law checks for a user-given pair; needs κ < ∞ and cure_fraction = 1"""
    if math.isinf(setup.kappa):
        raise ConfigError(
            "censoring",
            f"{setup.label()} has κ=∞, which the limit laws do not cover",
        )
    if not setup.is_proper:
        raise ConfigError("cure_fraction", "verification runs need cure_fraction = 1")
    if n < 2:
        raise DomainError(f"verification runs need n >= 2, got {n}")

    started = time.perf_counter()
    reports = limit_law_checks(
        setup, n, reps, seed, {**DEFAULT_CUSTOM_TOLERANCES, **(tolerances or {})}, threads
    )
    return VerificationSummary(
        preset="custom", reports=reports, elapsed_seconds=time.perf_counter() - started
    )
