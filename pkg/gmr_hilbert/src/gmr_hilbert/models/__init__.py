"""Data models for series, estimates and verification runs."""

from gmr_hilbert.models.params import GmrParams, Strategy, Validity
from gmr_hilbert.models.results import (
    ComplexityReport,
    CostModel,
    CostPoint,
    Dimensions,
    HilbertResult,
    HybridCandidate,
    SweepRow,
)
from gmr_hilbert.models.verification import (
    DegreeCheck,
    MacaulayRank,
    SeriesVerification,
    TrialRecord,
    TrialsReport,
)

__all__ = [
    "GmrParams",
    "Strategy",
    "Validity",
    "HilbertResult",
    "CostModel",
    "CostPoint",
    "Dimensions",
    "HybridCandidate",
    "ComplexityReport",
    "SweepRow",
    "MacaulayRank",
    "DegreeCheck",
    "SeriesVerification",
    "TrialRecord",
    "TrialsReport",
]
