"""
Data models for censored-extremes
"""

from .arg_models import (
    ComputeKappaArgs,
    CureTestArgs,
    KaplanMeierArgs,
    LimitLawArgs,
    NormingArgs,
    SetupArgs,
    SimulateArgs,
)
from .config_models import ExperimentConfig, ExperimentKind, OutputFormat
from .law_models import LawKind, NormingConstants
from .reference_models import FAMILIES, PRESETS, FamilyInfo, VerifyPreset
from .report_models import (
    AuxiliaryDecayReport,
    ConvergenceReport,
    ConverseReport,
    CureTestResult,
    FitReport,
    RegularVariationReport,
    RepresentationReport,
    RLawCheckReport,
    RLawCheckRow,
    StretchTrendReport,
    TailAsymptoticsReport,
    VerificationSummary,
)
from .sample_models import (
    STATS_COLUMNS,
    ExtremeStats,
    KMECurve,
    ReplicationResult,
    SurvivalSample,
)

__all__ = [
    "ComputeKappaArgs",
    "CureTestArgs",
    "KaplanMeierArgs",
    "LimitLawArgs",
    "NormingArgs",
    "SetupArgs",
    "SimulateArgs",
    "ExperimentConfig",
    "ExperimentKind",
    "OutputFormat",
    "LawKind",
    "NormingConstants",
    "FAMILIES",
    "PRESETS",
    "FamilyInfo",
    "VerifyPreset",
    "AuxiliaryDecayReport",
    "ConvergenceReport",
    "ConverseReport",
    "CureTestResult",
    "FitReport",
    "RegularVariationReport",
    "RepresentationReport",
    "RLawCheckReport",
    "RLawCheckRow",
    "StretchTrendReport",
    "TailAsymptoticsReport",
    "VerificationSummary",
    "STATS_COLUMNS",
    "ExtremeStats",
    "KMECurve",
    "ReplicationResult",
    "SurvivalSample",
]
