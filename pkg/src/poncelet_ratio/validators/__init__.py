"""Input validators."""

from __future__ import annotations

from .base import BaseValidator, FiniteValidator, ValidationError
from .geometry import (
    CirclePairValidator,
    ConcentricValidator,
    EllipseValidator,
    IntegralSpecValidator,
    MatrixEntriesValidator,
)

__all__ = [
    "BaseValidator",
    "CirclePairValidator",
    "ConcentricValidator",
    "EllipseValidator",
    "FiniteValidator",
    "IntegralSpecValidator",
    "MatrixEntriesValidator",
    "ValidationError",
]
