"""
Norming constants and limit-law identifiers
"""

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field


class NormingConstants(BaseModel):
    """Centering b_n and scale a_n with n·H̄(b_n) = 1 and a_n = h(b_n)"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2, description="Sample size")
    b_n: float = Field(..., description="Centering constant")
    a_n: float = Field(..., gt=0, description="Scale constant")


class LawKind(str, Enum):
    """Limit laws the toolkit can evaluate"""

    L = "l"
    R = "r"
    R_RATIO = "r-ratio"
    GEOMETRIC = "count"
    POISSON_MIXTURE = "poisson"
    GUMBEL_MARGINAL = "gumbel"
