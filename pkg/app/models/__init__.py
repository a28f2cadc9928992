"""
Models

Pydantic models for input documents and result reports.
"""

from app.models.documents import (
    DigraphDocument,
    PosetDocument,
    StepFunctionDocument,
)
from app.models.results import (
    AxiomReport,
    ClassifyResult,
    ConvergeRow,
    CutDistanceBounds,
    DensityEstimate,
    ExchangeabilityReport,
    IndependenceReport,
    OrbitDeviation,
    PosetLimitReport,
    RunManifest,
    Statistic,
    Witness,
)

__all__ = [
    # Documents
    "DigraphDocument",
    "PosetDocument",
    "StepFunctionDocument",
    # Results
    "AxiomReport",
    "ClassifyResult",
    "ConvergeRow",
    "CutDistanceBounds",
    "DensityEstimate",
    "ExchangeabilityReport",
    "IndependenceReport",
    "OrbitDeviation",
    "PosetLimitReport",
    "RunManifest",
    "Statistic",
    "Witness",
]
