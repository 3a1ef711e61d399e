"""Utility helpers."""

from __future__ import annotations

from .exceptions import (
    BudgetError,
    ClosureDetected,
    ConvergentError,
    DomainError,
    PonceletError,
    PrecisionError,
)

__all__ = [
    "BudgetError",
    "ClosureDetected",
    "ConvergentError",
    "DomainError",
    "PonceletError",
    "PrecisionError",
]
