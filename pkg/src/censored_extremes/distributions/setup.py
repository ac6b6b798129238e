"""
CensoringSetup: lifetime model F, censoring model G and cure fraction p
"""

import math
from functools import cached_property
from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from ..errors import DomainError
from .families import DistributionBase, DistributionModel
from .kappa import EventProbabilities, event_probabilities, kappa_of
from .parsing import as_distribution


class CensoringSetup(BaseModel):
    """
    Independent right censoring of lifetimes drawn from p·F (immune with
    probability 1 − p) by censoring times drawn from G
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    lifetime: DistributionModel = Field(..., description="Lifetime distribution F")
    censoring: DistributionModel = Field(..., description="Censoring distribution G")
    cure_fraction: float = Field(
        1.0, ge=0.0, le=1.0, description="Susceptible proportion p; 1 − p are immune"
    )

    @field_validator("lifetime", "censoring", mode="before")
    @classmethod
    def _parse_family(cls, value: Any, info: ValidationInfo) -> DistributionBase:
        return as_distribution(value, info.field_name)

    @cached_property
    def kappa(self) -> float:
        """κ in [0, ∞]"""
        return kappa_of(self.lifetime, self.censoring)

    @cached_property
    def probabilities(self) -> EventProbabilities:
        return event_probabilities(self)

    @property
    def p_u(self) -> float:
        return self.probabilities.p_u

    @property
    def p_c(self) -> float:
        return self.probabilities.p_c

    @property
    def is_proper(self) -> bool:
        return self.cure_fraction == 1.0

    @property
    def representation_start(self) -> float:
        """Largest x0 of the two families"""
        return max(self.lifetime.x0, self.censoring.x0)

    def require_proper(self, what: str) -> None:
        if not self.is_proper:
            raise DomainError(
                f"{what} needs a proper lifetime distribution (cure_fraction=1), "
                f"got {self.cure_fraction!r}"
            )

    def require_finite_kappa(self, what: str) -> float:
        kappa = self.kappa
        if math.isinf(kappa):
            raise DomainError(f"{what} is stated for finite κ; {self.label()} has κ=∞")
        return kappa

    def swapped(self) -> "CensoringSetup":
        """Interchange the roles of F and G, which maps κ to 1/κ"""
        return CensoringSetup(
            lifetime=self.censoring,
            censoring=self.lifetime,
            cure_fraction=self.cure_fraction,
        )

    def label(self) -> str:
        return f"{self.lifetime.label()}/{self.censoring.label()}"

    def summary(self) -> Dict[str, Any]:
        """JSON-safe description, κ=∞ rendered as the string 'inf'"""
        kappa = self.kappa
        return {
            "lifetime": self.lifetime.label(),
            "censoring": self.censoring.label(),
            "cure_fraction": self.cure_fraction,
            "kappa": "inf" if math.isinf(kappa) else kappa,
        }
