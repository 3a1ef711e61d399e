"""Validators for the geometric inputs of each computation."""

from __future__ import annotations

from typing import Any

from mpmath import mp

from .base import BaseValidator, FiniteValidator, ValidationError


class CirclePairValidator(BaseValidator):
    """Validator for a circle of center c and radius r nested in the unit circle."""

    def validate(self, value: tuple[Any, Any]) -> None:
        """Validate that 0 < c < c + r < 1.

        Args:
            value: Pair (c, r)

        Raises:
            ValidationError: If the circles are not strictly nested
        """
        c, r = value
        FiniteValidator().validate({"c": c, "r": r})
        if c <= 0:
            msg = f"Center abscissa must be positive, got c={c}"
            raise ValidationError(msg)
        if r <= 0:
            msg = f"Radius must be positive, got r={r}"
            raise ValidationError(msg)
        if c + r >= 1:
            msg = f"Circles are not strictly nested: c + r = {c + r} >= 1"
            raise ValidationError(msg)


class ConcentricValidator(BaseValidator):
    """Validator for a radius strictly inside the unit circle."""

    def validate(self, value: Any) -> None:
        FiniteValidator().validate({"r": value})
        if not 0 < value < 1:
            msg = f"Radius must lie in (0, 1), got r={value}"
            raise ValidationError(msg)


class IntegralSpecValidator(BaseValidator):
    """Validator for the (psi, k^2, digits) triple of an incomplete integral."""

    def validate(self, value: tuple[Any, Any, int]) -> None:
        """Validate 0 < psi < pi/2, 0 < k2 < 1 and a positive digit count.

        Args:
            value: Triple (psi, k2, digits)

        Raises:
            ValidationError: If any component is out of range
        """
        psi, k2, digits = value
        FiniteValidator().validate({"psi": psi, "k2": k2})
        if not 0 < psi < mp.pi / 2:
            msg = f"psi must lie in (0, pi/2), got {psi}"
            raise ValidationError(msg)
        if not 0 < k2 < 1:
            msg = f"k2 must lie in (0, 1), got {k2}"
            raise ValidationError(msg)
        if digits < 1:
            msg = f"digits must be positive, got {digits}"
            raise ValidationError(msg)


class EllipseValidator(BaseValidator):
    """Validator for an ellipse with semi-axes a >= b > 0 inside the unit circle."""

    def validate(self, value: tuple[Any, Any, Any]) -> None:
        a, b, c = value
        FiniteValidator().validate({"a": a, "b": b, "c": c})
        if not a >= b > 0:
            msg = f"Semi-axes must satisfy a >= b > 0, got a={a}, b={b}"
            raise ValidationError(msg)
        # farthest point from the origin is on the major axis
        if abs(c) + a >= 1:
            msg = f"Ellipse is not inside the unit circle: |c| + a = {abs(c) + a}"
            raise ValidationError(msg)


class MatrixEntriesValidator(BaseValidator):
    """Validator for the six real entries of an upper-triangular 3x3 matrix."""

    def validate(self, value: dict[str, Any]) -> None:
        FiniteValidator().validate(value)
