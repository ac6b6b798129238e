"""
Reference data: supported families and verification presets
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class FamilyInfo(BaseModel):
    """Model for a supported distribution family"""

    family: str
    syntax: str
    tail: str
    auxiliary: str
    default_x0: float
    aliases: List[str] = Field(default_factory=list)


class VerifyPreset(BaseModel):
    """Named verification experiment"""

    name: str
    description: str
    lifetime: Optional[str] = None
    censoring: Optional[str] = None
    n_values: List[int] = Field(default_factory=list)
    reps: Optional[int] = None
    seed: int = 0
    draws: Optional[int] = None
    tolerances: Dict[str, float] = Field(default_factory=dict)
    includes: List[str] = Field(
        default_factory=list, description="Presets run in order by a composite preset"
    )
    overrides: Dict[str, Dict[str, float]] = Field(
        default_factory=dict, description="Per-included-preset draws/tolerance overrides"
    )


FAMILIES = [
    FamilyInfo(
        family="exp",
        syntax="exp(rate=1.0)",
        tail="exp(-rate*x), x >= 0",
        auxiliary="1/rate",
        default_x0=0.0,
        aliases=["exponential"],
    ),
    FamilyInfo(
        family="weibull",
        syntax="weibull(shape=2,scale=1)",
        tail="exp(-scale*x^shape), x >= 0",
        auxiliary="x^(1-shape)/(scale*shape)",
        default_x0=1.0,
    ),
    FamilyInfo(
        family="lognormal",
        syntax="lognormal(sigma=1)",
        tail="1 - Phi(log(x)/sigma), x > 0",
        auxiliary="x*sigma*Mills(log(x)/sigma)",
        default_x0=1.0,
    ),
    FamilyInfo(
        family="normaltail",
        syntax="normaltail(sigma=1)",
        tail="1 - Phi(x/sigma)",
        auxiliary="sigma*Mills(x/sigma)",
        default_x0=1.0,
        aliases=["normal"],
    ),
]


PRESETS: Dict[str, VerifyPreset] = {
    p.name: p
    for p in [
        VerifyPreset(
            name="exp-kappa1",
            description="Exp(1)/Exp(1): atom of L, L-law shape, geometric count, "
            "n·p(M_u) limit and κ estimate",
            lifetime="exp(rate=1)",
            censoring="exp(rate=1)",
            n_values=[10_000],
            reps=5000,
            seed=42,
            tolerances={
                "atom": 0.025,
                "ks": 0.05,
                "tv": 0.05,
                "np_limit": 0.05,
                "kappa": 0.1,
            },
        ),
        VerifyPreset(
            name="exp-kappa2",
            description="Exp(1)/Exp(2): geometric count with mean 2",
            lifetime="exp(rate=1)",
            censoring="exp(rate=2)",
            n_values=[10_000],
            reps=5000,
            seed=43,
            tolerances={"tv": 0.05, "mean": 0.15},
        ),
        VerifyPreset(
            name="weibull-kappa0",
            description="Weibull(2,1)/Weibull(1,1): vanishing level stretch as n grows",
            lifetime="weibull(shape=2,scale=1)",
            censoring="weibull(shape=1,scale=1)",
            n_values=[100, 1000, 10_000],
            reps=2000,
            seed=44,
        ),
        VerifyPreset(
            name="r-law",
            description="Closed-form ratio law against the Gumbel-pair oracle",
            draws=10_000_000,
            seed=0,
            tolerances={"r_law": 0.002},
        ),
        VerifyPreset(
            name="identities",
            description="Poisson mixture identity, norming constants, tail asymptotics "
            "and partial converse",
            tolerances={
                "poisson": 1e-8,
                "norming": 1e-10,
                "tail": 1e-9,
                "converse": 1e-6,
            },
        ),
        VerifyPreset(
            name="all-fast",
            description="identities, exp-kappa1, exp-kappa2 and r-law at 10^6 draws",
            includes=["identities", "exp-kappa1", "exp-kappa2", "r-law"],
            overrides={"r-law": {"draws": 1_000_000, "r_law": 0.004}},
        ),
        VerifyPreset(
            name="all",
            description="Every preset at full size",
            includes=["identities", "exp-kappa1", "exp-kappa2", "weibull-kappa0", "r-law"],
        ),
    ]
}
