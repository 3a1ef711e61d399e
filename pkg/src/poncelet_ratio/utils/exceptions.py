"""Custom exceptions and error handling utilities."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, ClassVar, NoReturn

if TYPE_CHECKING:
    from collections.abc import Sequence


class PonceletError(Exception):
    """Base class for every failure the library reports to its callers."""

    exit_code: ClassVar[int] = 1


class DomainError(PonceletError):
    """Raised when geometry or parameters fall outside the supported domain."""

    exit_code: ClassVar[int] = 2


class PrecisionError(PonceletError):
    """Raised when the working precision is exhausted."""

    exit_code: ClassVar[int] = 3


class ConvergentError(PrecisionError):
    """Raised when a denominator sequence is not a convergent sequence."""


class BudgetError(PonceletError):
    """Raised when an iteration budget or partial-quotient guard runs out."""

    exit_code: ClassVar[int] = 4


class ClosureDetected(PonceletError):  # noqa: N818
    """Signal that an interscribed polygon closed, so the ratio is rational.

    Attributes:
        index: Number of sides of the closed polygon
        records: Records found before the closure
    """

    exit_code: ClassVar[int] = 0

    def __init__(self, index: int, records: Sequence[Any] = ()):
        super().__init__(f"Polygon closes after {index} sides")
        self.index = index
        self.records = list(records)


def raise_precision_error(
    message: str, error: str | Exception | None = None
) -> NoReturn:
    """Raise a PrecisionError with the given message and optional error details.

    Args:
        message: The error message to display
        error: Optional error details or exception

    Raises:
        PrecisionError: Always raises this exception with the formatted message
    """
    if error:
        error_msg = str(error) if isinstance(error, Exception) else error
        message = f"{message}: {error_msg}"

    raise PrecisionError(message)
