"""
Report models produced by the verification checks and the cure test
"""

from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field, computed_field

StatisticKind = Literal[
    "KS",
    "TV",
    "chi-square",
    "atom-fraction",
    "abs-error",
    "rel-error",
    "mean",
    "trend",
]


class FitReport(BaseModel):
    """Goodness-of-fit row; passes when the observed value is within the threshold"""

    statistic: StatisticKind
    observed: float
    threshold: float
    sample_size: int = Field(..., ge=0)
    label: str = ""
    p_value: Optional[float] = None
    details: Dict[str, float] = Field(default_factory=dict)

    @computed_field
    @property
    def passed(self) -> bool:
        return bool(self.observed <= self.threshold)


class ConvergenceReport(BaseModel):
    """Sequence of discrepancies along a grid plus a monotone-trend flag"""

    grid: List[float]
    discrepancies: List[float]
    monotone_trend: bool


class TailAsymptoticsReport(ConvergenceReport):
    """
    Ratios ∫_x^∞ Ḡ dF / H̄(x) and ∫_x^∞ F̄ dG / H̄(x) against 1/(1+κ) and κ/(1+κ)

    discrepancies holds the uncensored-ratio distances.
    """

    kappa: float
    uncensored_ratio: List[float]
    censored_ratio: List[float]
    uncensored_target: float
    censored_target: float
    censored_discrepancies: List[float]
    censored_monotone_trend: bool
    complement_error: float = Field(
        ..., description="max |uncensored + censored − 1| over the grid"
    )


class ConverseReport(ConvergenceReport):
    """k(x) = ∫_x^∞ Ḡ dF / H̄(x) against f(x)/g(x) through (1 − k)/k"""

    kappa: float
    k_values: List[float]
    implied_ratio: List[float]
    auxiliary_ratio: List[float]
    final_discrepancy: float


class RegularVariationReport(ConvergenceReport):
    """U(tx)/U(t) along t against x^κ, with the F̄/Ḡ dominance trend"""

    kappa: float
    x: float
    ratios: List[float]
    target: float
    log_tail_ratio: List[float]
    tail_ratio_trend: Literal["increasing", "decreasing", "flat"]
    expected_dominance: Literal["censoring", "lifetime", "balanced"]


class AuxiliaryDecayReport(ConvergenceReport):
    """|f'(x)| along x = x0·2^k"""

    family: str


class RepresentationReport(BaseModel):
    """F̄(x) against F̄(x0)·exp{−∫_{x0}^x 1/f}"""

    family: str
    grid: List[float]
    relative_errors: List[float]
    max_relative_error: float


class RLawCheckRow(BaseModel):
    kappa: float
    x: float
    quadrature: float
    oracle: float
    oracle_se: float
    discrepancy: float
    ratio_event_oracle: float
    ratio_event_se: float
    ratio_event_discrepancy: float


class RLawCheckReport(BaseModel):
    """Closed-form ratio law against the Gumbel-pair Monte Carlo oracle"""

    draws: int
    tolerance: float
    rows: List[RLawCheckRow]
    max_discrepancy: float
    systematic_gap: bool = Field(
        ..., description="Closed form departs from the literal ratio event"
    )

    @computed_field
    @property
    def passed(self) -> bool:
        return bool(self.max_discrepancy <= self.tolerance)


class StretchTrendReport(BaseModel):
    """Degeneracy trend of the level stretch across increasing n"""

    n_values: List[int]
    fraction_no_stretch: List[float]
    fraction_above_epsilon: List[float]
    epsilon: float
    increasing: bool


class CureTestResult(BaseModel):
    """Outcome of the test of H0: κ = 0 (no cure proportion)"""

    kappa_hat: float = Field(..., ge=0)
    observed_r: float = Field(..., ge=0, le=1)
    critical_value: Optional[float] = Field(
        None, description="c_α, absent when the tail never falls to α"
    )
    alpha: float = Field(..., gt=0, lt=1)
    reject: bool
    status: Literal["ok", "kappa_zero", "alpha_exceeds_atom_bound", "unattainable"]
    law: Literal["integral", "ratio"] = "integral"
    mode: Literal["single", "aggregated"] = "single"
    rejection_rate: Optional[float] = None
    replications_used: Optional[int] = None


class VerificationSummary(BaseModel):
    """FitReport rows of one verify run, in check order"""

    preset: str
    reports: List[FitReport]
    elapsed_seconds: float = 0.0

    @computed_field
    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def failed(self) -> List[FitReport]:
        return [r for r in self.reports if not r.passed]
