"""Reference values computed without polygons.

Complete integrals come from the arithmetic-geometric mean, everything else
from tanh-sinh quadrature with an a-posteriori error estimate. Each routine
runs with guard digits and returns values rounded back to the caller's
precision.
"""

from __future__ import annotations

import logging

from mpmath import mp, mpf

from ..models.geometry import CirclePair, ThetaMeasure, WeightSpec
from ..utils.exceptions import DomainError, PrecisionError

logger = logging.getLogger(__name__)

GUARD_DIGITS = 20


def _digits(digits: int | None) -> int:
    return mp.dps if digits is None else digits


def _quad(func, interval: list, digits: int) -> mpf:
    value, error = mp.quad(func, interval, error=True, maxdegree=10)
    if error > mpf(10) ** (-digits):
        msg = f"Quadrature error estimate {mp.nstr(error, 3)} exceeds 1e-{digits}"
        raise PrecisionError(msg)
    return value


def complete_F(k2: mpf, digits: int | None = None) -> mpf:
    """F(pi/2, k) = pi / (2 AGM(1, sqrt(1 - k^2)))."""
    digits = _digits(digits)
    if not 0 <= k2 < 1:
        msg = f"k2 must lie in [0, 1), got {k2}"
        raise DomainError(msg)
    with mp.workdps(digits + GUARD_DIGITS):
        value = mp.pi / (2 * mp.agm(1, mp.sqrt(1 - k2)))
    return +value


def complete_F_quadrature(k2: mpf, digits: int | None = None) -> mpf:
    """F(pi/2, k) by direct quadrature; independent of the AGM route."""
    digits = _digits(digits)
    with mp.workdps(digits + GUARD_DIGITS):
        value = _quad(lambda t: 1 / mp.sqrt(1 - k2 * mp.sin(t) ** 2), [0, mp.pi / 2], digits)
    return +value


def incomplete_F(psi: mpf, k2: mpf, digits: int | None = None) -> mpf:
    """F(psi, k) from the library's Legendre form."""
    digits = _digits(digits)
    with mp.workdps(digits + GUARD_DIGITS):
        value = mp.ellipf(psi, k2)
    return +value


def phi_integral(phi: mpf, I: mpf, digits: int | None = None) -> mpf:  # noqa: E741
    """Phi(phi, I) = integral over [0, phi] of dt / sqrt(I - cos t).

    Raises:
        DomainError: If I <= 1 or phi is outside [0, 2 pi]
    """
    digits = _digits(digits)
    if I <= 1:
        msg = f"Pencil invariant must exceed 1, got {I}"
        raise DomainError(msg)
    with mp.workdps(digits + GUARD_DIGITS):
        if not 0 <= phi <= 2 * mp.pi * (1 + mpf(10) ** (-digits)):
            msg = f"phi must lie in [0, 2 pi], got {phi}"
            raise DomainError(msg)
        if phi == 0:
            return mpf(0)
        nodes = [0, phi] if phi <= mp.pi else [0, mp.pi, phi]
        value = _quad(lambda t: 1 / mp.sqrt(I - mp.cos(t)), nodes, digits)
    return +value


def chord_integral(start: mpf, end: mpf, I: mpf, digits: int | None = None) -> mpf:  # noqa: E741
    """Integral of dt / sqrt(I - cos t) over an unwrapped arc [start, end]."""
    digits = _digits(digits)
    with mp.workdps(digits + GUARD_DIGITS):
        value = _quad(lambda t: 1 / mp.sqrt(I - mp.cos(t)), [start, end], digits)
    return +value


def phi_pi_from_agm(I: mpf, digits: int | None = None) -> mpf:  # noqa: E741
    """Phi(pi, I) = k sqrt(2) F(pi/2, k) with k^2 = 2 / (I + 1)."""
    k2 = 2 / (I + 1)
    return mp.sqrt(2 * k2) * complete_F(k2, digits)


def theta_measure(I: mpf, phi: mpf, digits: int | None = None) -> ThetaMeasure:  # noqa: E741
    return ThetaMeasure(I=I, normalization=phi_integral(mp.pi, I, digits), phi=phi)


def circle_theta(pair: CirclePair, digits: int | None = None) -> mpf:
    """theta = Phi(phi_1, I) / (2 Phi(pi, I)) for the orbit of z = 1."""
    phi1 = mp.acos(pair.cos_phi1)
    return phi_integral(phi1, pair.I, digits) / (2 * phi_integral(mp.pi, pair.I, digits))


def circle_theta_legendre(pair: CirclePair, digits: int | None = None) -> mpf:
    """Same ratio as ``circle_theta`` through (K - F((pi - phi_1)/2, k)) / (2K)."""
    digits = _digits(digits)
    with mp.workdps(digits + GUARD_DIGITS):
        k2 = 2 / (pair.I + 1)
        psi = (mp.pi - mp.acos(pair.cos_phi1)) / 2
        K = mp.ellipk(k2)
        value = (K - mp.ellipf(psi, k2)) / (2 * K)
    return +value


def ellipse_theta(weights: WeightSpec, digits: int | None = None) -> mpf:
    """Weighted arc ratio: integral of w over [0, psi_1] divided by [0, 2 pi]."""
    digits = _digits(digits)
    with mp.workdps(digits + GUARD_DIGITS):
        psi1 = mp.acos(weights.cos_psi1)
        head = _quad(weights.weight, [0, psi1], digits)
        full = 2 * _quad(weights.weight, [0, mp.pi], digits)
        value = head / full
    return +value
