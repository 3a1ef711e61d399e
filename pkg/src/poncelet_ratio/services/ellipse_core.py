"""Polygons interscribed between the unit circle and an inner ellipse.

An ellipse (x - c)^2/a^2 + y^2/b^2 = 1 yields the rotation ratio of the
weight 1/sqrt(alpha0 - 2 alpha1 cos t + alpha2 cos^2 t). There is no giant
step here: records are found by iterating the vertex map.
"""

from __future__ import annotations

import logging

from mpmath import mp, mpc, mpf

from ..models.convergents import ConvergentTable
from ..models.geometry import EllipseConfig, VertexRecord, WeightSpec
from ..utils.exceptions import BudgetError, ClosureDetected, DomainError, PrecisionError
from ..utils.precision import closure_threshold, tolerance
from . import cf_engine

logger = logging.getLogger(__name__)


def weights_from_ellipse(cfg: EllipseConfig) -> WeightSpec:
    a2, b2, c = cfg.a**2, cfg.b**2, cfg.c
    return WeightSpec(
        alpha0=a2 * (1 - b2) + b2 * c * c,
        alpha1=b2 * c,
        alpha2=b2 - a2,
        cos_psi1=(a2 + b2 - (1 - c) ** 2) / ((1 - c) ** 2 + b2 - a2),
    )


def ellipse_from_weights(spec: WeightSpec) -> EllipseConfig:
    """Recover (a, b, c) from integrand weights and the start-chord cosine.

    With t = b^2 the weight relations reduce to
    t^3 - (1 + alpha2) t^2 + (alpha2 + alpha0) t - alpha1^2 = 0; the
    admissible root also reproduces cos_psi1.

    Raises:
        DomainError: If no root gives an admissible ellipse
    """
    al0, al1, al2 = spec.alpha0, spec.alpha1, spec.alpha2
    roots = mp.polyroots([1, -(1 + al2), al2 + al0, -al1 * al1], extraprec=2 * mp.prec)
    candidates: list[tuple[mpf, EllipseConfig]] = []
    for root in roots:
        if abs(mp.im(root)) > tolerance(10):
            continue
        t = mp.re(root)
        a2 = t - al2
        if not (0 < t < 1 and a2 >= t):
            continue
        cfg = EllipseConfig(a=mp.sqrt(a2), b=mp.sqrt(t), c=al1 / t)
        if abs(cfg.c) + cfg.a >= 1:
            continue
        mismatch = abs(weights_from_ellipse(cfg).cos_psi1 - spec.cos_psi1)
        candidates.append((mismatch, cfg))
    if not candidates:
        msg = f"No admissible ellipse for weights ({al0}, {al1}, {al2})"
        raise DomainError(msg)
    mismatch, cfg = min(candidates, key=lambda item: item[0])
    if mismatch > closure_threshold():
        msg = f"Weights admit an ellipse but cos_psi1 is off by {mp.nstr(mismatch, 5)}"
        raise DomainError(msg)
    return cfg


def ellipse_chord_residual(z: mpc, w: mpc, cfg: EllipseConfig) -> mpc:
    """Left-hand side of the tangency equation for the chord [z, w]."""
    a2, b2, c = cfg.a**2, cfg.b**2, cfg.c
    return (
        w * w * ((c * z - 1) ** 2 + (b2 - a2) * z * z)
        - 2 * w * ((c * z - 1) * (z - c) + (a2 + b2) * z)
        + (z - c) ** 2
        + b2
        - a2
    )


def ellipse_next_vertex(z_prev: mpc, z_cur: mpc, cfg: EllipseConfig) -> mpc:
    """Vertex following z_cur along the chord chain.

    Raises:
        PrecisionError: If the result leaves the unit circle
    """
    d = cfg.b**2 - cfg.a**2
    c = cfg.c
    z_next = ((c - z_cur) ** 2 + d) / (z_prev * (d * z_cur**2 + (c * z_cur - 1) ** 2))
    drift = abs(abs(z_next) - 1)
    if drift > tolerance():
        msg = f"Vertex modulus drifted by {mp.nstr(drift, 5)}"
        raise PrecisionError(msg)
    return z_next


def first_chord(cfg: EllipseConfig) -> mpc:
    """Second vertex z_1 from z_0 = 1, taken in the upper half plane."""
    cos = weights_from_ellipse(cfg).cos_psi1
    return mpc(cos, mp.sqrt(1 - cos * cos))


def _deltas_at(cfg: EllipseConfig, z1: mpc | None, indices: tuple[int, ...]) -> list[mpf]:
    """1 - cos psi_k at the given indices, recomputed from the start."""
    z_prev = mpc(1, 0)
    z_cur = first_chord(cfg) if z1 is None else mpc(z1)
    found = {1: 1 - mp.re(z_cur)}
    for k in range(2, max(indices) + 1):
        z_next = ellipse_next_vertex(z_prev, z_cur, cfg)
        z_prev, z_cur = z_cur, z_next / abs(z_next)
        if k in indices:
            found[k] = 1 - mp.re(z_cur)
    return [found[k] for k in indices]


def ellipse_record_scan(
    cfg: EllipseConfig,
    z1: mpc | None = None,
    budget: int = 1_000_000,
    *,
    max_records: int | None = None,
) -> list[VertexRecord]:
    """Indices where 1 - cos psi_k reaches a strict new minimum.

    The chord [1, z1] seeds the minimum as q_0 = 1. Without ``max_records``
    the whole budget is scanned. A value tying the current record at working
    precision is re-tested at doubled precision.

    Raises:
        ClosureDetected: If a vertex returns to 1 within working precision
        BudgetError: If ``max_records`` records are not found in the budget
        PrecisionError: If a tie persists at doubled precision
    """
    z_prev = mpc(1, 0)
    z_cur = first_chord(cfg) if z1 is None else mpc(z1)
    zero = closure_threshold()
    tie = tolerance()
    eps = 1 - mp.re(z_cur)
    best_q = 1
    records: list[VertexRecord] = []
    for k in range(2, budget + 1):
        z_next = ellipse_next_vertex(z_prev, z_cur, cfg)
        z_prev, z_cur = z_cur, z_next / abs(z_next)
        delta = 1 - mp.re(z_cur)
        if delta < zero:
            logger.info("Polygon closes after %d sides", k)
            raise ClosureDetected(k, records)
        is_record = delta < eps
        if abs(delta - eps) <= tie * eps:
            logger.info("Tie with record value at k=%d; re-testing", k)
            with mp.workdps(2 * mp.dps):
                fine_delta, fine_eps = _deltas_at(cfg, z1, (k, best_q))
                if abs(fine_delta - fine_eps) <= closure_threshold() * fine_eps:
                    msg = f"Vertices {best_q} and {k} are not separated at {mp.dps} digits"
                    raise PrecisionError(msg)
                is_record = fine_delta < fine_eps
        if is_record:
            eps, best_q = delta, k
            records.append(VertexRecord(q=k, distance=delta))
            logger.debug("Record q=%d delta=%s", k, mp.nstr(delta, 8))
            if max_records is not None and len(records) >= max_records:
                return records
    if max_records is not None:
        msg = f"Only {len(records)} of {max_records} records within {budget} steps"
        raise BudgetError(msg)
    return records


def ellipse_ratio_scan(
    cfg: EllipseConfig,
    z1: mpc | None = None,
    budget: int = 1_000_000,
    *,
    max_records: int | None = None,
) -> ConvergentTable:
    """Convergent table of the ellipse's rotation ratio from its records."""
    records = ellipse_record_scan(cfg, z1, budget, max_records=max_records)
    return cf_engine.recover_numerators([record.q for record in records])
