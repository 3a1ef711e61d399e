"""Cubic-curve arithmetic behind the giant steps.

Consecutive vertices (z, w) of a tangential chord lie on a biquadratic curve
that maps to y^2 = 4cr^2 (z^3 - 2Iz^2 + z). Moving one chord forward is a
translation by the fixed generator point, so jumping q chords at once is a
single point addition.
"""

from __future__ import annotations

import logging

from mpmath import mp, mpc, mpf

from ..models.geometry import CirclePair, CurvePoint, GeneratorPoint, GiantStepState, RecordTriple
from ..utils.exceptions import BudgetError, PrecisionError
from ..utils.precision import tolerance

logger = logging.getLogger(__name__)


def curve_rhs(z: mpf | mpc, pair: CirclePair) -> mpf | mpc:
    """Right-hand side 4cr^2 (z^3 - 2Iz^2 + z)."""
    return 4 * pair.c * pair.r**2 * (z**3 - 2 * pair.I * z**2 + z)


def on_curve(point: CurvePoint, pair: CirclePair, *, slack: int = 5) -> bool:
    if point.is_identity:
        return True
    rhs = curve_rhs(point.z, pair)
    scale = max(1, abs(point.y) ** 2, abs(rhs))
    return abs(point.y**2 - rhs) <= tolerance(slack) * scale


def to_weierstrass(z: mpf | mpc, w: mpf | mpc, pair: CirclePair) -> CurvePoint:
    """Map a chord (z, w) with p(z, w) = 0 to the point (z, y).

    Raises:
        PrecisionError: If the image is off the curve beyond tolerance
    """
    c, r, I = pair.c, pair.r, pair.I
    y = w * (1 - c * z) ** 2 - z * r * r - c * (1 - 2 * I * z + z * z)
    point = CurvePoint(z=z, y=y)
    if not on_curve(point, pair):
        msg = f"Point ({mp.nstr(z, 8)}, {mp.nstr(y, 8)}) is off the curve"
        raise PrecisionError(msg)
    return point


def _same(u: mpf | mpc, v: mpf | mpc) -> bool:
    return abs(u - v) <= tolerance() * max(1, abs(u), abs(v))


def ec_add(P: CurvePoint, Q: CurvePoint, pair: CirclePair) -> CurvePoint:
    """Chord-and-tangent sum of two curve points."""
    if P.is_identity:
        return Q
    if Q.is_identity:
        return P
    k4 = 4 * pair.c * pair.r**2
    z, y, Z, Y = P.z, P.y, Q.z, Q.y
    if _same(z, Z):
        if _same(y, -Y) or _same(y, 0):
            return CurvePoint.identity()
        slope = k4 * (3 * z * z - 4 * pair.I * z + 1) / (2 * y)
    else:
        slope = (Y - y) / (Z - z)
    z_new = slope**2 / k4 + 2 * pair.I - z - Z
    return CurvePoint(z=z_new, y=slope * (Z - z_new) - Y)


def multiply(P: CurvePoint, k: int, pair: CirclePair) -> CurvePoint:
    """[k]P by double-and-add; negative k negates."""
    if k < 0:
        return multiply(P.negate(), -k, pair)
    result, addend = CurvePoint.identity(), P
    while k:
        if k & 1:
            result = ec_add(result, addend, pair)
        addend = ec_add(addend, addend, pair)
        k >>= 1
    return result


def swap_torsion(point: CurvePoint) -> CurvePoint:
    """Translate by the 2-torsion point (0, 0): (z, y) -> (1/z, -y/z^2)."""
    if point.is_identity:
        return CurvePoint(z=mpf(0), y=mpf(0))
    if point.z == 0:
        return CurvePoint.identity()
    return CurvePoint(z=1 / point.z, y=-point.y / point.z**2)


def generator_point(pair: CirclePair) -> GeneratorPoint:
    """The translation (1/c, (1-c^2)^2/(4cr^2), -2r^2/c) taking one chord to the next."""
    c, r = pair.c, pair.r
    return GeneratorPoint(
        Z=1 / c,
        W=(1 - c * c) ** 2 / (4 * c * r * r),
        Y=-2 * r * r / c,
    )


def giant_step_set(
    state: GiantStepState, *, max_partial_quotient: int = 1_000_000
) -> tuple[RecordTriple, int]:
    """Advance by the anchor index until gamma drops below the anchor's gamma.

    Each step adds the anchor point to the moving one in the
    cancellation-free form, so its cost does not depend on the indices.

    Returns:
        The new record and the number of steps, which is the next partial
        quotient

    Raises:
        PrecisionError: If gamma fails to decrease across a step
        BudgetError: If more than ``max_partial_quotient`` steps are needed
    """
    pair, anchor = state.pair, state.anchor
    c, I = pair.c, pair.I
    c2 = c * c
    g_a, eps_a = anchor.gamma, state.eps_anchor
    g_a2 = g_a * g_a
    cur = state.cur
    steps = 0
    while cur.gamma > g_a:
        if steps >= max_partial_quotient:
            msg = f"Partial quotient after q={anchor.q} exceeds {max_partial_quotient}"
            raise BudgetError(msg)
        g_c = cur.gamma
        g_c2 = g_c * g_c
        rho = mp.sqrt(1 - 2 * I * c * g_c2 + c2 * g_c2 * g_c2)
        eps_c = c * g_c2 * (2 * I - c * g_c2) / (1 + rho)
        v = (
            4 * I * c * g_c * g_a
            - 2 * (eps_c + eps_a - eps_c * eps_a)
            - c2 * g_c * g_a * (g_c2 + g_a2)
        )
        diff = g_c - g_a
        alpha = g_c * g_a * v / (diff * diff)
        if alpha >= 1:
            msg = f"Giant step from q={cur.q} lost precision (alpha={mp.nstr(alpha, 8)})"
            raise PrecisionError(msg)
        denom = 1 - c2 * g_c2 * g_a2
        g_new = diff / denom * mp.sqrt(1 - alpha)
        if g_new >= g_c:
            msg = f"gamma did not decrease on the giant step from q={cur.q}"
            raise PrecisionError(msg)
        y_new = (anchor.y + c2 * g_a2 * g_a2 * cur.y) / denom * (
            g_new * g_new - g_c2
        ) / g_a2 - cur.y
        cur = RecordTriple(q=cur.q + anchor.q, gamma=g_new, y=y_new)
        steps += 1
    state.cur = cur
    state.steps = steps
    logger.info("Giant-step set at q=%d: a=%d -> q=%d", anchor.q, steps, cur.q)
    return cur, steps


def refinement_threshold(digits: int, guard: int = 4) -> mpf:
    """Largest record gamma for which the refined ratio reaches ``digits``."""
    return mpf(10) ** (-mpf(digits + guard) / 4)


def refine_theta(
    records: tuple[RecordTriple, RecordTriple],
    convergents: tuple[tuple[int, int], tuple[int, int]],
    *,
    digits: int | None = None,
    guard: int = 4,
) -> mpf:
    """Ratio interpolated between the last two convergents.

    Args:
        records: Records (q_{j-1}, q_j), oldest first
        convergents: Matching (p, q) pairs, oldest first
        digits: Target digits; enforces the refinement threshold when given
        guard: Extra digits folded into the threshold

    Raises:
        PrecisionError: If gamma_{q_{j-1}} is above the threshold for ``digits``
    """
    (older, newer), ((p_old, q_old), (p_new, q_new)) = records, convergents
    delta = older.gamma
    if digits is not None and delta > refinement_threshold(digits, guard):
        msg = (
            f"gamma={mp.nstr(delta, 5)} at q={older.q} is too large for {digits} digits "
            f"(needs <= {mp.nstr(refinement_threshold(digits, guard), 5)})"
        )
        raise PrecisionError(msg)
    g_old, g_new = older.gamma, newer.gamma
    return (g_old * p_new + g_new * p_old) / (g_old * q_new + g_new * q_old)
