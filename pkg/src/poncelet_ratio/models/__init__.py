"""Domain models."""

from __future__ import annotations

from .convergents import ConvergentRow, ConvergentTable
from .dynamics import (
    CycleReport,
    DynamicsVerdict,
    NRConfig,
    StartCase,
    TrajectoryState,
    VerdictKind,
)
from .geometry import (
    CirclePair,
    CurvePoint,
    EllipseConfig,
    GeneratorPoint,
    GiantStepState,
    IntegralSpec,
    RecordTriple,
    ThetaMeasure,
    UnitVertex,
    VertexRecord,
    WeightSpec,
)
from .report import ReportBuilder, RunReport

__all__ = [
    "CirclePair",
    "ConvergentRow",
    "ConvergentTable",
    "CurvePoint",
    "CycleReport",
    "DynamicsVerdict",
    "EllipseConfig",
    "GeneratorPoint",
    "GiantStepState",
    "IntegralSpec",
    "NRConfig",
    "RecordTriple",
    "ReportBuilder",
    "RunReport",
    "StartCase",
    "ThetaMeasure",
    "TrajectoryState",
    "UnitVertex",
    "VerdictKind",
    "VertexRecord",
    "WeightSpec",
]
