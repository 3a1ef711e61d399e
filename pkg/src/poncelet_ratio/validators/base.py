"""Base validator classes."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any

from mpmath import mp

from ..utils.exceptions import DomainError


class ValidationError(DomainError):
    """Exception raised for validation errors."""


class BaseValidator(ABC):
    """Abstract base class for all validators."""

    @abstractmethod
    def validate(self, value: Any) -> None:
        """Validate a value.

        Args:
            value: The value to validate

        Raises:
            ValidationError: If validation fails
        """


class FiniteValidator(BaseValidator):
    """Validator that ensures every value in a mapping is a finite real."""

    def validate(self, value: dict[str, Any]) -> None:
        """Validate that each named value is finite.

        Args:
            value: Mapping of parameter names to numbers

        Raises:
            ValidationError: If a value is missing, NaN or infinite
        """
        for name, number in value.items():
            if number is None:
                msg = f"Missing value for {name}"
                raise ValidationError(msg)
            if not mp.isfinite(number):
                msg = f"{name} must be finite, got {number}"
                raise ValidationError(msg)
