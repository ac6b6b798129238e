"""
Sample-level data models: observed samples, extreme statistics, replication runs
and Kaplan-Meier curves
"""

from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..distributions import CensoringSetup
from .law_models import NormingConstants


class SurvivalSample(BaseModel):
    """Observed pairs (T_i, censored_i) with T_i = min(T_i*, U_i)"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    times: np.ndarray = Field(..., description="Observed times")
    censored: np.ndarray = Field(..., description="True where T_i* > U_i")

    @field_validator("times", mode="before")
    @classmethod
    def _as_float_array(cls, value: Any) -> np.ndarray:
        arr = np.array(value, dtype=float).reshape(-1)
        if np.any(np.isnan(arr)):
            raise ValueError("times contain NaN")
        arr.flags.writeable = False
        return arr

    @field_validator("censored", mode="before")
    @classmethod
    def _as_bool_array(cls, value: Any) -> np.ndarray:
        arr = np.array(value, dtype=bool).reshape(-1)
        arr.flags.writeable = False
        return arr

    @model_validator(mode="after")
    def _check_lengths(self) -> "SurvivalSample":
        if self.times.shape != self.censored.shape:
            raise ValueError(
                f"times has {self.times.size} entries, censored has {self.censored.size}"
            )
        return self

    @property
    def n(self) -> int:
        return int(self.times.size)

    @property
    def censored_fraction(self) -> float:
        return float(self.censored.mean()) if self.n else 0.0


class ExtremeStats(BaseModel):
    """Maxima and exceedance count of one sample"""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    m_u: Optional[float] = Field(None, alias="M_u", description="Largest uncensored time")
    m_c: Optional[float] = Field(None, alias="M_c", description="Largest censored time")
    m: float = Field(..., alias="M", description="Largest observed time")
    n_u: int = Field(..., alias="N_u", ge=0)
    n_c: int = Field(..., alias="N_c", ge=0)
    n_c_exceed: int = Field(
        ..., alias="N_c_exceed", ge=0, description="Censored times strictly above M_u"
    )
    norm_l: Optional[float] = Field(None, alias="norm_L", description="(M − M_u)/a_n")
    norm_r: Optional[float] = Field(None, alias="norm_R", description="(M − M_u)/M")

    @property
    def has_uncensored(self) -> bool:
        return self.m_u is not None

    @property
    def stretch(self) -> Optional[float]:
        """Raw level stretch M − M_u"""
        return None if self.m_u is None else self.m - self.m_u

    @property
    def no_stretch(self) -> bool:
        return self.m_u is not None and self.m == self.m_u


STATS_COLUMNS = ["M_u", "M_c", "M", "N_u", "N_c", "N_c_exceed", "norm_L", "norm_R"]


class ReplicationResult(BaseModel):
    """Per-replication ExtremeStats of one simulated experiment"""

    model_config = ConfigDict(frozen=True)

    setup: CensoringSetup
    n: int = Field(..., ge=1)
    rep_count: int = Field(..., ge=1)
    master_seed: int = Field(..., ge=0)
    norming: Optional[NormingConstants] = None
    stats: List[ExtremeStats]

    @property
    def valid_stats(self) -> List[ExtremeStats]:
        """Replications with at least one uncensored observation"""
        return [s for s in self.stats if s.has_uncensored]

    @property
    def dropped_count(self) -> int:
        return sum(1 for s in self.stats if not s.has_uncensored)

    def column(self, name: str, valid_only: bool = True) -> np.ndarray:
        """Values of one ExtremeStats field (alias or field name), None as NaN"""
        field = _FIELD_BY_ALIAS.get(name, name)
        rows = self.valid_stats if valid_only else self.stats
        return np.array(
            [np.nan if getattr(s, field) is None else getattr(s, field) for s in rows],
            dtype=float,
        )

    def fraction_no_stretch(self) -> float:
        """Share of valid replications with M = M_u"""
        valid = self.valid_stats
        if not valid:
            return float("nan")
        return sum(1 for s in valid if s.no_stretch) / len(valid)

    def setup_summary(self) -> Dict[str, Any]:
        return {
            **self.setup.summary(),
            "n": self.n,
            "reps": self.rep_count,
            "seed": self.master_seed,
        }


_FIELD_BY_ALIAS = {
    info.alias: name for name, info in ExtremeStats.model_fields.items() if info.alias
}


class KMECurve(BaseModel):
    """Kaplan-Meier step function and its terminal flat segment"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    jump_times: np.ndarray = Field(..., description="Distinct uncensored times")
    survivor_values: np.ndarray = Field(..., description="Survivor value after each jump")
    at_risk: np.ndarray = Field(..., description="Risk set size at each jump")
    events: np.ndarray = Field(..., description="Uncensored times tied at each jump")
    plateau_level: float = Field(..., ge=0.0, le=1.0)
    level_stretch: float = Field(..., description="M − M_u, or M without uncensored data")
    exceed_count: int = Field(..., ge=0)
    largest_observation: float
    largest_uncensored: Optional[float] = None
    n: int = Field(..., ge=1)

    def survival_at(self, t):
        """Right-continuous evaluation of the step function"""
        idx = np.searchsorted(self.jump_times, np.asarray(t, dtype=float), side="right")
        values = np.concatenate(([1.0], self.survivor_values))[idx]
        return float(values) if np.ndim(values) == 0 else values

    def step_table(self) -> List[Dict[str, float]]:
        return [
            {
                "time": float(t),
                "survivor": float(s),
                "at_risk": int(r),
                "events": int(d),
            }
            for t, s, r, d in zip(
                self.jump_times, self.survivor_values, self.at_risk, self.events
            )
        ]
