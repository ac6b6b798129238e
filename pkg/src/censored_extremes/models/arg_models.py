"""
Argument models for MCP tools
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from .law_models import LawKind


class SetupArgs(BaseModel):
    """Lifetime/censoring pair in config-string form"""

    lifetime: str = Field(..., description="Lifetime family, e.g. exp(rate=1)")
    censoring: str = Field(..., description="Censoring family, e.g. weibull(shape=2,scale=1)")
    cure_fraction: float = Field(
        1.0, ge=0.0, le=1.0, description="Susceptible proportion p (1 = no immunes)"
    )


class ComputeKappaArgs(SetupArgs):
    """Arguments for compute_kappa tool"""


class NormingArgs(SetupArgs):
    """Arguments for get_norming_constants tool"""

    n: int = Field(..., ge=2, description="Sample size")


class LimitLawArgs(BaseModel):
    """Arguments for evaluate_limit_law tool"""

    law: LawKind = Field(..., description="l, r, r-ratio, count, poisson or gumbel")
    kappa: Optional[float] = Field(None, ge=0, description="Balance parameter κ")
    t: Optional[float] = Field(None, gt=0, description="Extremal-process time (gumbel)")
    points: List[float] = Field(
        ..., min_length=1, description="Evaluation points x, or counts j for discrete laws"
    )


class SimulateArgs(SetupArgs):
    """Arguments for simulate_extremes tool"""

    n: int = Field(1000, ge=2, description="Sample size per replication")
    reps: int = Field(200, ge=1, le=20000, description="Number of replications")
    seed: int = Field(0, ge=0, description="Master seed")
    normalize: bool = Field(True, description="Compute norming constants and norm_L")


class KaplanMeierArgs(BaseModel):
    """Arguments for fit_kaplan_meier tool"""

    times: List[float] = Field(..., min_length=1, description="Observed times")
    censored: List[bool] = Field(..., min_length=1, description="True for censored times")


class CureTestArgs(KaplanMeierArgs):
    """Arguments for run_cure_test tool"""

    alpha: float = Field(0.05, gt=0, lt=1, description="Test level")
    kappa_hat: Optional[float] = Field(
        None, ge=0, description="Estimate of κ; the sample's exceedance count when omitted"
    )
    law: Literal["integral", "ratio"] = Field(
        "integral", description="Ratio law used for the critical value"
    )
