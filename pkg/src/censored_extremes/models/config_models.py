"""
Experiment configuration for the censex command line
"""

from enum import Enum
from typing import Any, Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from ..distributions import DistributionModel, as_distribution
from ..numerics import MAX_SEED
from .law_models import LawKind


class ExperimentKind(str, Enum):
    SIMULATE = "simulate"
    LIMITS = "limits"
    KME = "kme"
    VERIFY = "verify"
    TEST_CURE = "test-cure"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class ExperimentConfig(BaseModel):
    """
    One CLI run; flags override values read from a JSON config file

    Unknown keys are rejected. The JSON dump of a config is the metadata echo
    written at the top of every output file.
    """

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    experiment: ExperimentKind
    lifetime: Optional[DistributionModel] = None
    censoring: Optional[DistributionModel] = None
    cure_fraction: float = Field(1.0, ge=0.0, le=1.0)
    n: int = Field(10_000, ge=1)
    reps: int = Field(1000, ge=1)
    seed: int = Field(0, ge=0, le=MAX_SEED)
    threads: Optional[int] = Field(None, ge=1)
    normalize: bool = True

    law: Optional[LawKind] = None
    kappa: Optional[float] = Field(None, ge=0)
    t: Optional[float] = Field(None, gt=0)
    grid: Optional[str] = None

    input: Optional[str] = Field(None, alias="in")
    alpha: float = Field(0.05, gt=0.0, lt=1.0)
    estimate_kappa: bool = False
    critical_law: Literal["integral", "ratio"] = "integral"

    preset: Optional[str] = None
    draws: Optional[int] = Field(None, ge=1)
    tolerances: Dict[str, float] = Field(default_factory=dict)

    out: Optional[str] = None
    format: OutputFormat = OutputFormat.CSV
    comparison: bool = Field(False, description="Omit the timestamp line")

    @field_validator("lifetime", "censoring", mode="before")
    @classmethod
    def _parse_family(cls, value: Any, info: ValidationInfo) -> Any:
        return None if value is None else as_distribution(value, info.field_name)

    def echo(self) -> Dict[str, Any]:
        """JSON-safe config dump with families as config strings"""
        data = self.model_dump(mode="json", by_alias=True, exclude_none=True)
        for key in ("lifetime", "censoring"):
            model = getattr(self, key)
            if model is not None:
                data[key] = model.label()
        return data
