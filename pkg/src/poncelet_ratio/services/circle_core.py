"""Geometry of two nested circles and the baby-step record scan.

Vertices live on the unit circle; the inner circle has center c on the real
axis and radius r. A chord [z, w] of the unit circle is tangent to the inner
circle exactly when (cwz - w - z + c)^2 - 4r^2 wz vanishes. Iterating the
tangency from z = 1 gives the vertex sequence whose closest returns to 1 are
the best-approximation denominators of the rotation ratio.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

from mpmath import mp, mpc, mpf

from ..models.geometry import CirclePair, IntegralSpec, RecordTriple, VertexRecord
from ..utils.exceptions import BudgetError, ClosureDetected, DomainError, PrecisionError
from ..utils.precision import closure_threshold, tolerance, to_mpf
from ..validators.geometry import CirclePairValidator

if TYPE_CHECKING:
    from collections.abc import Iterator

logger = logging.getLogger(__name__)


def pencil_invariant(c: str | float | mpf, r: str | float | mpf) -> mpf:
    """Return I = (1 + c^2 - r^2) / (2c) for strictly nested circles.

    Raises:
        ValidationError: If c <= 0, r <= 0 or c + r >= 1
    """
    c, r = to_mpf(c), to_mpf(r)
    CirclePairValidator().validate((c, r))
    return (1 + c * c - r * r) / (2 * c)


def params_from_integral(spec: IntegralSpec) -> CirclePair:
    """Circle pair whose rotation ratio encodes F(psi, k).

    The returned pair has pencil invariant 2/k^2 - 1 and its first vertex
    from z = 1 sits at angle 2 psi.

    Raises:
        DomainError: If c or r underflow the working precision
        PrecisionError: If the invariant check fails
    """
    psi, k2 = spec.psi, spec.k2
    cos, sin = mp.cos(psi), mp.sin(psi)
    c = (mp.sqrt(1 - k2 * cos**2) - mp.sqrt(1 - k2)) ** 2 / (k2 * sin**2)
    r = (1 - c) * cos
    floor = tolerance()
    if c < floor or r < floor:
        msg = f"Degenerate circle pair for psi={psi}, k2={k2}: c={c}, r={r}"
        raise DomainError(msg)
    pair = CirclePair.from_center_radius(c, r)
    expected = 2 / k2 - 1
    if abs(pair.I - expected) > tolerance(10) * expected:
        msg = f"Pencil invariant {pair.I} does not match 2/k2 - 1 = {expected}"
        raise PrecisionError(msg)
    return pair


def chord_residual(z: mpc, w: mpc, pair: CirclePair) -> mpc:
    """Tangency polynomial p(z, w); zero iff the chord [z, w] touches the circle."""
    c, r = pair.c, pair.r
    return (c * w * z - w - z + c) ** 2 - 4 * r * r * w * z


def next_vertex(
    z_prev: mpc, z_cur: mpc, pair: CirclePair, *, tol: mpf | None = None
) -> mpc:
    """Vertex following z_cur, given the chord [z_prev, z_cur].

    Raises:
        PrecisionError: If the new vertex leaves the unit circle beyond tol
    """
    c = pair.c
    z_next = (c - z_cur) ** 2 / (z_prev * (1 - c * z_cur) ** 2)
    drift = abs(abs(z_next) - 1)
    if drift > (tolerance() if tol is None else tol):
        msg = f"Vertex modulus drifted by {mp.nstr(drift, 5)}"
        raise PrecisionError(msg)
    return z_next


def tangent_neighbors(z: mpc, pair: CirclePair) -> tuple[mpc, mpc]:
    """Backward and forward neighbors of a unit-circle point z.

    Both roots w of p(z, w) = 0 are returned; the forward one keeps the
    inner circle on the left of the directed chord z -> w.
    """
    c, r = pair.c, pair.r
    A = (c * z - 1) ** 2
    B = 2 * (c * z - 1) * (c - z) - 4 * r * r * z
    C = (c - z) ** 2
    disc = mp.sqrt(B * B - 4 * A * C)
    roots = ((-B + disc) / (2 * A), (-B - disc) / (2 * A))
    forward = max(roots, key=lambda w: mp.im(mp.conj(w - z) * (c - z)))
    backward = roots[1] if forward is roots[0] else roots[0]
    return backward, forward


def initial_vertices(pair: CirclePair) -> tuple[mpc, mpc]:
    """The pair (z_{-1}, z_0) = (exp(-i phi_1), 1) seeding the orbit of 1."""
    cos = pair.cos_phi1
    sin = mp.sqrt(1 - cos * cos)
    return mpc(cos, -sin), mpc(1, 0)


def cos_phi_from_w(w_k: mpf, pair: CirclePair) -> mpf:
    """Cosine of the k-th vertex angle from w_k = c * gamma_k^2.

    Raises:
        DomainError: If w_k is not in (0, I - sqrt(I^2 - 1)]
    """
    I = pair.I
    bound = I - mp.sqrt(I * I - 1)
    if not 0 < w_k <= bound * (1 + tolerance()):
        msg = f"w={w_k} outside (0, {bound}]"
        raise DomainError(msg)
    return 1 - 4 * w_k * (I - 1) / (w_k - 1) ** 2


def record_ordinate(pair: CirclePair, gamma: mpf, gamma_next: mpf) -> mpf:
    """Curve ordinate y at a record with value gamma, given the next gamma."""
    c, r, I = pair.c, pair.r, pair.I
    e2 = gamma * gamma
    return (
        c * gamma_next**2 * (1 - c * c * e2) ** 2
        - c * e2 * r * r
        - c * (1 - 2 * I * c * e2 + c * c * e2 * e2)
    )


def seed_record(pair: CirclePair) -> RecordTriple:
    """The virtual record q = 1 with gamma = 1 and y = 2cr^2."""
    return RecordTriple(q=1, gamma=mpf(1), y=2 * pair.c * pair.r**2)


def gamma_sequence(pair: CirclePair) -> Iterator[tuple[int, mpf]]:
    """Yield (k, gamma_k) for k = 1, 2, ... until some gamma vanishes."""
    c2 = pair.c**2
    g_prev, g_cur = mpf(1), 2 * pair.r / (1 - c2)
    yield 1, g_prev
    k = 2
    while True:
        yield k, g_cur
        if g_cur == 0:
            return
        g_prev, g_cur = g_cur, abs(1 - g_cur**2) / ((1 - c2 * g_cur**2) * g_prev)
        k += 1


def _gamma_at(pair: CirclePair, k: int) -> mpf:
    for index, gamma in gamma_sequence(pair):
        if index == k:
            return gamma
    return mpf(0)


def baby_step_scan(
    pair: CirclePair,
    eps_stop: float | mpf = 0.1,
    max_iter: int = 10_000_000,
    *,
    max_records: int | None = None,
) -> list[RecordTriple]:
    """Scan gamma_k one chord at a time and collect the records.

    A record is an index k >= 2 where gamma_k drops strictly below every
    earlier value (seeded by gamma_1 = 1). The scan stops at the first record
    below ``eps_stop``, or once ``max_records`` records are collected.

    Args:
        pair: Nested circle pair
        eps_stop: Record value at which to hand off to giant steps
        max_iter: Largest index to examine
        max_records: Number of records after which to stop

    Returns:
        Records in increasing q order

    Raises:
        ClosureDetected: If some gamma_k vanishes to working precision
        BudgetError: If max_iter is reached first
        PrecisionError: If gamma leaves the admissible range
    """
    c, I = pair.c, pair.I
    c2 = c * c
    w_bound = (I - mp.sqrt(I * I - 1)) * (1 + tolerance())
    zero = closure_threshold()
    tie = tolerance()
    eps_stop = to_mpf(eps_stop)

    records: list[RecordTriple] = []
    eps = mpf(1)
    g_prev, g_cur = mpf(1), 2 * pair.r / (1 - c2)
    k = 2
    while True:
        if g_cur < zero:
            logger.info("Polygon closes after %d sides", k)
            raise ClosureDetected(k, records)
        if c * g_cur**2 > w_bound:
            msg = f"gamma_{k}={mp.nstr(g_cur, 10)} violates the vertex bound"
            raise PrecisionError(msg)
        g_next = abs(1 - g_cur**2) / ((1 - c2 * g_cur**2) * g_prev)

        is_record = g_cur < eps
        if abs(g_cur - eps) <= tie * eps:
            logger.info("Tie with record value at k=%d; closure candidate", k)
            with mp.workdps(2 * mp.dps):
                is_record = _gamma_at(pair, k) < eps * (1 - tolerance())
        if is_record:
            eps = g_cur
            records.append(
                RecordTriple(q=k, gamma=g_cur, y=record_ordinate(pair, g_cur, g_next))
            )
            logger.debug("Record q=%d gamma=%s", k, mp.nstr(g_cur, 8))
            if eps < eps_stop or len(records) == max_records:
                return records

        if k >= max_iter:
            msg = f"No record below {eps_stop} within {max_iter} chords"
            raise BudgetError(msg)
        g_prev, g_cur = g_cur, g_next
        k += 1


def vertex_scan(
    pair: CirclePair,
    budget: int,
    *,
    max_records: int | None = None,
    eps_stop: float | mpf | None = None,
) -> list[VertexRecord]:
    """Iterate vertices directly and record the closest returns to z = 1.

    Records are the indices k >= 2 where |z_k - 1| is a strict new minimum
    (seeded by |z_1 - 1|). Works for the concentric pair as well.

    Raises:
        ClosureDetected: If a vertex returns to 1 within working precision
        BudgetError: If the budget runs out before the stop condition
    """
    z_prev, z_cur = initial_vertices(pair)
    zero = closure_threshold()
    records: list[VertexRecord] = []
    best: mpf | None = None
    for k in range(1, budget + 1):
        z_next = next_vertex(z_prev, z_cur, pair)
        z_prev, z_cur = z_cur, z_next / abs(z_next)
        distance = abs(z_cur - 1)
        if distance < zero:
            logger.info("Polygon closes after %d sides", k)
            raise ClosureDetected(k, records)
        if best is None:
            best = distance
            continue
        if distance < best:
            best = distance
            records.append(VertexRecord(q=k, distance=distance))
            if max_records is not None and len(records) >= max_records:
                return records
            if eps_stop is not None and distance < eps_stop:
                return records
    if max_records is None and eps_stop is None:
        return records
    msg = f"Vertex scan stopped after {budget} chords with {len(records)} records"
    raise BudgetError(msg)
