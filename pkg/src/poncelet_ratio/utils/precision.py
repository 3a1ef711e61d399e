"""Working-precision policy and decimal-string formatting."""

from __future__ import annotations

from mpmath import mp, mpf

MIN_WORKING_DIGITS = 64


def working_digits(digits: int) -> int:
    """Decimal digits carried internally for a requested output precision.

    Args:
        digits: Requested number of significant digits

    Returns:
        max(1.2 * digits + 30, 64), rounded up
    """
    return max(-(-12 * digits // 10) + 30, MIN_WORKING_DIGITS)


def tolerance(slack: int = 5) -> mpf:
    """Residual tolerance 10^(slack - dps) at the current working precision."""
    return mpf(10) ** (slack - mp.dps)


def closure_threshold() -> mpf:
    """Values below 10^(-dps/2) are treated as exact zeros."""
    return mpf(10) ** (-(mp.dps // 2))


def to_mpf(value: str | int | float | mpf) -> mpf:
    """Convert user input to an ``mpf`` at the current precision.

    Strings are parsed exactly at the working precision, so ``"0.2"`` gives
    the decimal value rather than the nearest double.
    """
    return mpf(value)


def format_decimal(value: mpf, digits: int) -> str:
    """Format ``value`` with exactly ``digits`` significant figures."""
    return mp.nstr(value, digits, strip_zeros=False)


def agreement_digits(value: mpf, reference: mpf) -> int:
    """Number of leading significant digits on which two values agree."""
    if value == reference:
        return mp.dps
    if reference == 0:
        return 0
    rel = abs(value - reference) / abs(reference)
    return max(0, int(mp.floor(-mp.log10(rel))))
