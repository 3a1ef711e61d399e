"""Interscribed polygons around the numerical-range boundary of a 3x3 matrix.

For T = [[c1, b1, a], [0, c2, b2], [0, 0, c3]] the boundary is the envelope
of the lines Re(exp(-i phi) z) = lambda(phi), lambda being the largest
eigenvalue of Re(exp(-i phi) T). A chord of the unit circle with normal
direction phi and half-angle s is tangent exactly when lambda(phi) = cos s.

The trajectory never needs eigenvectors: at each vertex the next tangency
solves a cubic in lambda^2 whose known root (the incoming chord) is divided
out. The density h along the trajectory is the product of the ratios in
which the tangent points split the chords.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field, replace
from typing import TYPE_CHECKING, Any

import numpy as np
from mpmath import mp, mpc, mpf

from ..models.dynamics import (
    CycleReport,
    DynamicsVerdict,
    NRConfig,
    StartCase,
    TrajectoryState,
    VerdictKind,
)
from ..models.geometry import UnitVertex
from ..utils.exceptions import ConvergentError, DomainError, PrecisionError
from ..utils.precision import closure_threshold, tolerance
from . import cf_engine

if TYPE_CHECKING:
    from ..models.convergents import ConvergentTable

logger = logging.getLogger(__name__)

FAST_PATH_THRESHOLD = 200_000
FLOAT_FLOOR = 1e-9
MAX_STORED_VERTICES = 100_000

TraceHook = Callable[[int, Any, Any, Any, Any], None]


@dataclass(frozen=True)
class _Ops:
    sqrt: Callable
    atan2: Callable
    log: Callable
    slack: Callable[[], Any]


MP_OPS = _Ops(mp.sqrt, mp.atan2, mp.log, lambda: tolerance(10))
FLOAT_OPS = _Ops(math.sqrt, math.atan2, math.log, lambda: 1e-12)


@dataclass(frozen=True)
class BoundaryTrace:
    """Boundary sampled on a uniform grid of normal directions."""

    phi: np.ndarray
    points: np.ndarray
    max_gap: float
    max_support: float
    min_support: float
    min_eigen_gap: float


@dataclass
class TrajectoryRun:
    """Final state and statistics of one trajectory."""

    state: TrajectoryState
    steps: int
    slope: float
    cycle: CycleReport | None = None
    samples: list[tuple[int, float]] = field(default_factory=list)


# -- algebra shared by the arbitrary-precision and hardware-double paths --


def betas(alphas: tuple, C: Any, S: Any) -> tuple[Any, Any, Any, Any]:
    """Coefficients of lambda (b1 lambda^2 + b2) = mu (b3 lambda^2 + b4) at (C, S)."""
    al1, al2, al3, al4, al5 = alphas
    return (
        1 - al1 * C + al2 * (2 * C * C - 1) - al4 * (4 * C**3 - 3 * C),
        al5 * C - al3 + al2 * S * S - 3 * al4 * C * S * S,
        (al4 - al1 + 2 * al2 * C - 4 * al4 * C * C) * S,
        (al5 - al4 * S * S) * S,
    )


def char_poly(alphas: tuple, lam: Any, cos_phi: Any) -> Any:
    """det(lambda - Re(exp(-i phi) T)) as a polynomial in lambda and cos phi."""
    al1, al2, al3, al4, al5 = alphas
    return (
        lam**3
        - al1 * cos_phi * lam**2
        + (al2 * cos_phi**2 - al3) * lam
        - al4 * cos_phi**3
        + al5 * cos_phi
    )


def support_derivative(alphas: tuple, lam: Any, cos_phi: Any, sin_phi: Any) -> Any:
    """d lambda / d phi by implicit differentiation of the characteristic polynomial."""
    al1, al2, al3, al4, al5 = alphas
    f_lam = 3 * lam**2 - 2 * al1 * cos_phi * lam + al2 * cos_phi**2 - al3
    f_phi = sin_phi * (
        al1 * lam**2 - 2 * al2 * cos_phi * lam + 3 * al4 * cos_phi**2 - al5
    )
    return -f_phi / f_lam


def tangency_cubic(alphas: tuple, C: Any, S: Any) -> list[Any]:
    """Coefficients, highest first, of the squared tangency cubic in lambda^2."""
    b1, b2, b3, b4 = betas(alphas, C, S)
    return [
        b1 * b1 + b3 * b3,
        2 * b1 * b2 - b3 * b3 + 2 * b3 * b4,
        b2 * b2 - 2 * b3 * b4 + b4 * b4,
        -b4 * b4,
    ]


def forward_residual(
    alphas: tuple, C: Any, S: Any, lam_sq: Any, ops: _Ops = MP_OPS
) -> Any:
    b1, b2, b3, b4 = betas(alphas, C, S)
    lam, mu = ops.sqrt(lam_sq), ops.sqrt(1 - lam_sq)
    return lam * (b1 * lam_sq + b2) - mu * (b3 * lam_sq + b4)


def next_lambda_sq(
    alphas: tuple, C: Any, S: Any, lam_sq_in: Any, ops: _Ops = MP_OPS
) -> Any:
    """Outgoing lambda^2 at vertex (C, S), given the incoming chord's lambda^2.

    Raises:
        PrecisionError: If the deflated quadratic has complex roots
    """
    b1, b2, b3, b4 = betas(alphas, C, S)
    den = b1 * b1 + b3 * b3
    p = (b3 * b3 / 2 - b1 * b2 - b3 * b4) / den - lam_sq_in / 2
    q = b4 * b4 / (den * lam_sq_in)
    disc = p * p - q
    if disc < 0:
        if disc < -ops.slack() * max(1, p * p):
            msg = f"Tangency left the valid branch (p^2 - q = {disc})"
            raise PrecisionError(msg)
        disc = 0 * disc
    return p + ops.sqrt(disc)


def _polish(alphas: tuple, C: mpf, S: mpf, t: mpf, iterations: int = 1) -> mpf:
    A, B, Cc, D = tangency_cubic(alphas, C, S)
    for _ in range(iterations):
        g = ((A * t + B) * t + Cc) * t + D
        dg = (3 * A * t + 2 * B) * t + Cc
        if dg == 0:
            break
        t = t - g / dg
    return t


def chord_determinant(cfg: NRConfig, z: mpc, w: mpc) -> mpc:
    """det(T + wz T^T - (w + z) Id); zero iff the chord [z, w] touches the boundary."""
    T = cfg.matrix()
    M = T + (w * z) * T.T - (w + z) * mp.eye(3)
    return mp.det(M)


# -- starting vertices --


def _solve_start(cfg: NRConfig, C: mpf, S: mpf) -> mpf:
    roots = mp.polyroots(tangency_cubic(cfg.alphas, C, S), extraprec=2 * mp.prec)
    scale = closure_threshold()
    valid = []
    for root in roots:
        if abs(mp.im(root)) > scale:
            continue
        t = mp.re(root)
        if 0 < t < 1 and abs(forward_residual(cfg.alphas, C, S, t)) <= scale:
            valid.append(t)
    if not valid:
        msg = f"No forward tangent chord from ({mp.nstr(C, 8)}, {mp.nstr(S, 8)})"
        raise DomainError(msg)
    return max(valid)


def start_state(
    cfg: NRConfig,
    start: StartCase | None = StartCase.POSITIVE_REAL,
    z0: mpc | None = None,
) -> TrajectoryState:
    """Initial vertex and first tangency, from a start case or a free vertex.

    Raises:
        DomainError: If the first tangency is not a forward chord
    """
    al1, al2, al3, al4, al5 = cfg.alphas
    if z0 is not None:
        z0 = mpc(z0)
        C, S = mp.re(z0) / abs(z0), mp.im(z0) / abs(z0)
        t = _solve_start(cfg, C, S)
    elif start is StartCase.POSITIVE_REAL:
        C, S = mpf(1), mpf(0)
        t = (al3 - al5) / (1 - al1 + al2 - al4)
    elif start is StartCase.NEGATIVE_REAL:
        C, S = mpf(-1), mpf(0)
        t = (al3 + al5) / (1 + al1 + al2 + al4)
    else:
        if max(abs(cfg.c1), abs(cfg.c2), abs(cfg.c3)) > tolerance():
            msg = "The off-axis start is only valid for a zero diagonal"
            raise DomainError(msg)
        C, S = mp.sqrt(1 - al3), mp.sqrt(al3)
        t = al3
        if abs(forward_residual(cfg.alphas, C, S, t)) > closure_threshold():
            msg = "The off-axis start does not solve the forward tangency"
            raise DomainError(msg)
    if not 0 < t < 1:
        msg = f"First tangency lambda^2={mp.nstr(t, 10)} is outside (0, 1)"
        raise DomainError(msg)
    return TrajectoryState(
        k=0, cos_psi=C, sin_psi=S, lambda_sq=t, cos_psi0=C, sin_psi0=S, records=[]
    )


# -- one step --


def chord_tangent_point(cfg: NRConfig, state: TrajectoryState) -> mpc:
    """Tangent point of the chord leaving the state's vertex."""
    lam, mu = mp.sqrt(state.lambda_sq), mp.sqrt(1 - state.lambda_sq)
    C, S = state.cos_psi, state.sin_psi
    cos_phi, sin_phi = C * lam - S * mu, S * lam + C * mu
    slope = support_derivative(cfg.alphas, lam, cos_phi, sin_phi)
    return mpc(lam, slope) * mpc(cos_phi, sin_phi)


def nr_step(
    state: TrajectoryState, cfg: NRConfig, *, verify: bool = False, polish: bool = True
) -> TrajectoryState:
    """Move to the next vertex and solve for the following tangency.

    Raises:
        PrecisionError: If lambda^2 leaves (0, 1), the deflated quadratic has
            no real root, or (with ``verify``) the chord misses the boundary
    """
    t = state.lambda_sq
    if not 0 < t < 1:
        msg = f"lambda^2={mp.nstr(t, 10)} outside (0, 1) at k={state.k}"
        raise PrecisionError(msg)
    lam, mu = mp.sqrt(t), mp.sqrt(1 - t)
    cos2, sin2 = 2 * t - 1, 2 * lam * mu
    C = cos2 * state.cos_psi - sin2 * state.sin_psi
    S = cos2 * state.sin_psi + sin2 * state.cos_psi
    norm = mp.sqrt(C * C + S * S)
    C, S = C / norm, S / norm

    if verify:
        residual = abs(chord_determinant(cfg, state.vertex, mpc(C, S)))
        if residual > closure_threshold():
            msg = (
                f"Chord {state.k} misses the boundary "
                f"(residual {mp.nstr(residual, 5)})"
            )
            raise PrecisionError(msg)

    t_next = next_lambda_sq(cfg.alphas, C, S, t)
    if polish:
        t_next = _polish(cfg.alphas, C, S, t_next)

    delta = 1 - (C * state.cos_psi0 + S * state.sin_psi0)
    epsilon = state.epsilon
    if delta < epsilon:
        epsilon = delta
        state.records.append(state.k + 1)
    return replace(
        state,
        k=state.k + 1,
        cos_psi=C,
        sin_psi=S,
        lambda_sq=t_next,
        epsilon=epsilon,
        turned=state.turned + 2 * mp.atan2(mu, lam),
    )


def h_update(
    state: TrajectoryState, zeta: mpc, z_prev: mpc, z_cur: mpc
) -> TrajectoryState:
    """Multiply h by (z_cur - zeta) / (zeta - z_prev).

    Raises:
        PrecisionError: If the ratio is not a positive real
    """
    ratio = (z_cur - zeta) / (zeta - z_prev)
    if abs(mp.im(ratio)) > closure_threshold() * abs(ratio) or mp.re(ratio) <= 0:
        msg = f"Tangent point off its chord at k={state.k} (ratio {mp.nstr(ratio, 8)})"
        raise PrecisionError(msg)
    log_h = state.log_h + mp.log(mp.re(ratio))
    return replace(
        state,
        log_h=log_h,
        log_h_min=min(state.log_h_min, log_h),
        log_h_max=max(state.log_h_max, log_h),
    )


# -- boundary --


def _hermitian_part(cfg: NRConfig, phi: mpf) -> mp.matrix:
    T = cfg.matrix()
    rot = mp.expj(-phi)
    A = mp.matrix(3, 3)
    for i in range(3):
        for j in range(3):
            A[i, j] = (rot * T[i, j] + mp.conj(rot) * T[j, i]) / 2
    return A


def support_eigenvalues(cfg: NRConfig, phi: mpf) -> list[mpf]:
    """Eigenvalues of Re(exp(-i phi) T) in ascending order."""
    values = mp.eigh(_hermitian_part(cfg, phi), eigvals_only=True)
    return sorted(mp.re(v) for v in values)


def nr_support_point(cfg: NRConfig, phi: mpf, *, method: str = "difference") -> mpc:
    """Boundary point (lambda + i lambda') exp(i phi) with outward normal phi.

    ``method`` is "difference" for a centered numerical derivative of the top
    eigenvalue or "implicit" for the characteristic-polynomial derivative.
    """
    values = support_eigenvalues(cfg, phi)
    lam = values[-1]
    if values[-1] - values[-2] < mpf(10) ** (-(mp.dps // 4)):
        logger.warning(
            "Eigenvalue crossing near phi=%s; tangent point is ambiguous",
            mp.nstr(phi, 10),
        )
    if method == "implicit":
        slope = support_derivative(cfg.alphas, lam, mp.cos(phi), mp.sin(phi))
    elif method == "difference":
        slope = mp.diff(lambda x: support_eigenvalues(cfg, x)[-1], phi)
    else:
        msg = f"Unknown derivative method: {method}"
        raise ValueError(msg)
    return mpc(lam, slope) * mp.expj(phi)


def boundary_trace(cfg: NRConfig, n: int = 720) -> BoundaryTrace:
    """Sample the boundary on n normal directions in hardware doubles."""
    T = np.array(cfg.matrix().tolist(), dtype=float)
    phi = np.linspace(0.0, 2 * np.pi, n, endpoint=False)
    rot = np.exp(-1j * phi)[:, None, None]
    A = (rot * T + np.conj(rot) * T.T) / 2
    eig = np.linalg.eigvalsh(A)
    lam = eig[:, -1]
    alphas = tuple(float(a) for a in cfg.alphas)
    slope = support_derivative(alphas, lam, np.cos(phi), np.sin(phi))
    points = (lam + 1j * slope) * np.exp(1j * phi)
    gaps = np.abs(np.diff(np.append(points, points[:1])))
    return BoundaryTrace(
        phi=phi,
        points=points,
        max_gap=float(gaps.max()),
        max_support=float(lam.max()),
        min_support=float(lam.min()),
        min_eigen_gap=float((eig[:, -1] - eig[:, -2]).min()),
    )


# -- trajectories --


class _CycleSearch:
    """First return to the anchor vertex, confirmed by one more traverse."""

    def __init__(self, anchor: int, tol: float) -> None:
        self.anchor = anchor
        self.tol = tol
        self.z_anchor: Any = None
        self.log_anchor: Any = 0
        self.period: int | None = None
        self.z_return: Any = 0j
        self.log_return: Any = 0
        self.first_distance: Any = 0.0
        self.vertices: list[tuple[Any, Any]] = []

    def observe(self, k: int, C: Any, S: Any, log_h: Any) -> CycleReport | None:
        if k < self.anchor:
            return None
        z = mpc(C, S) if isinstance(C, mpf) else complex(C, S)
        if k == self.anchor:
            self.z_anchor, self.log_anchor = z, log_h
            return None
        if self.period is None:
            distance = abs(z - self.z_anchor)
            if distance < self.tol:
                self.period = k - self.anchor
                self.z_return, self.log_return = z, log_h
                self.first_distance = distance
                self.vertices = []
            return None
        if self.period <= MAX_STORED_VERTICES or k == self.anchor + 2 * self.period:
            self.vertices.append((C, S))
        if k < self.anchor + 2 * self.period:
            return None
        confirm = abs(z - self.z_return)
        if confirm >= self.tol:
            logger.debug("Near-return of period %d not confirmed", self.period)
            self.period = None
            return None
        return CycleReport(
            period=self.period,
            product=mp.exp(mpf(self.log_return) - mpf(self.log_anchor)),
            anchor_index=self.anchor,
            vertices=[UnitVertex(re=mpf(c), im=mpf(s)) for c, s in self.vertices],
            return_distance=mpf(self.first_distance),
            confirm_distance=mpf(confirm),
        )


def _slope(samples: list[tuple[int, float]]) -> float:
    tail = samples[len(samples) // 2 :]
    if len(tail) < 2:
        return 0.0
    x = np.array([k for k, _ in tail], dtype=float)
    y = np.array([v for _, v in tail], dtype=float)
    return float(np.polyfit(x, y, 1)[0])


def log_h_trend(samples: list[tuple[int, float]], floor: float = 10.0) -> int:
    """Sign of a sustained drift of log h over the second half, 0 if bounded.

    A drift counts when the fitted rise exceeds both ``floor`` and twice the
    spread of the residuals about the fitted line.
    """
    tail = samples[len(samples) // 2 :]
    if len(tail) < 3:
        return 0
    x = np.array([k for k, _ in tail], dtype=float)
    y = np.array([v for _, v in tail], dtype=float)
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    rise = abs(slope) * (x[-1] - x[0])
    if rise > max(floor, 2 * float(np.ptp(residuals))):
        return 1 if slope > 0 else -1
    return 0


def _reanchor(
    cfg: NRConfig, C: float, S: float, t: float
) -> tuple[float, float, float]:
    C_mp, S_mp = mpf(C), mpf(S)
    norm = mp.sqrt(C_mp**2 + S_mp**2)
    C_mp, S_mp = C_mp / norm, S_mp / norm
    t_mp = _polish(cfg.alphas, C_mp, S_mp, mpf(t), iterations=3)
    drift = abs(t_mp - t)
    if drift > 1e-8:
        logger.warning("Fast path drifted by %s in lambda^2", mp.nstr(drift, 3))
    lam, mu = mp.sqrt(t_mp), mp.sqrt(1 - t_mp)
    z = mpc(C_mp, S_mp)
    residual = abs(chord_determinant(cfg, z, z * mpc(lam, mu) ** 2))
    logger.debug(
        "Re-anchored: lambda^2 drift %s, residual %s",
        mp.nstr(drift, 3),
        mp.nstr(residual, 3),
    )
    return float(C_mp), float(S_mp), float(t_mp)


def _run_mp(
    cfg: NRConfig,
    state: TrajectoryState,
    budget: int,
    search: _CycleSearch | None,
    trace: TraceHook | None,
    sample_every: int,
    verify_steps: int,
) -> TrajectoryRun:
    samples: list[tuple[int, float]] = [(0, 0.0)]
    cycle = None
    if search is not None:
        cycle = search.observe(0, state.cos_psi, state.sin_psi, state.log_h)
    while state.k < budget and cycle is None:
        zeta = chord_tangent_point(cfg, state)
        nxt = nr_step(state, cfg, verify=state.k < verify_steps)
        state = h_update(nxt, zeta, state.vertex, nxt.vertex)
        if trace is not None:
            trace(state.k, state.cos_psi, state.sin_psi, state.lambda_sq, state.log_h)
        if state.k % sample_every == 0:
            samples.append((state.k, float(state.log_h)))
        if search is not None:
            cycle = search.observe(state.k, state.cos_psi, state.sin_psi, state.log_h)
    return TrajectoryRun(
        state=state, steps=state.k, slope=_slope(samples), cycle=cycle, samples=samples
    )


def _run_fast(
    cfg: NRConfig,
    state: TrajectoryState,
    budget: int,
    search: _CycleSearch | None,
    trace: TraceHook | None,
    sample_every: int,
    reanchor: int,
) -> TrajectoryRun:
    alphas = tuple(float(a) for a in cfg.alphas)
    C, S, t = float(state.cos_psi), float(state.sin_psi), float(state.lambda_sq)
    C0, S0 = float(state.cos_psi0), float(state.sin_psi0)
    log_h, lo, hi = 0.0, 0.0, 0.0
    eps, turned = float(state.epsilon), 0.0
    records = state.records
    sqrt, atan2, log = math.sqrt, math.atan2, math.log
    samples: list[tuple[int, float]] = [(0, 0.0)]
    cycle = search.observe(0, C, S, log_h) if search else None
    k = 0
    while k < budget and cycle is None:
        if not 0.0 < t < 1.0:
            msg = f"lambda^2={t} outside (0, 1) at k={k}"
            raise PrecisionError(msg)
        lam, mu = sqrt(t), sqrt(1.0 - t)
        cos_phi, sin_phi = C * lam - S * mu, S * lam + C * mu
        slope = support_derivative(alphas, lam, cos_phi, sin_phi)
        ratio = (mu - slope) / (mu + slope)
        if ratio <= 0.0:
            msg = f"Tangent point off its chord at k={k}"
            raise PrecisionError(msg)
        log_h += log(ratio)
        lo, hi = min(lo, log_h), max(hi, log_h)
        cos2, sin2 = 2.0 * t - 1.0, 2.0 * lam * mu
        C, S = cos2 * C - sin2 * S, cos2 * S + sin2 * C
        norm = sqrt(C * C + S * S)
        C, S = C / norm, S / norm
        t = next_lambda_sq(alphas, C, S, t, FLOAT_OPS)
        turned += 2.0 * atan2(mu, lam)
        k += 1
        delta = 1.0 - (C * C0 + S * S0)
        if delta < eps:
            eps = delta
            records.append(k)
        if k % reanchor == 0:
            C, S, t = _reanchor(cfg, C, S, t)
        if trace is not None:
            trace(k, C, S, t, log_h)
        if k % sample_every == 0:
            samples.append((k, log_h))
        if search is not None:
            cycle = search.observe(k, C, S, log_h)
    final = replace(
        state,
        k=k,
        cos_psi=mpf(C),
        sin_psi=mpf(S),
        lambda_sq=mpf(t),
        log_h=mpf(log_h),
        log_h_min=mpf(lo),
        log_h_max=mpf(hi),
        epsilon=mpf(eps),
        turned=mpf(turned),
    )
    return TrajectoryRun(
        state=final, steps=k, slope=_slope(samples), cycle=cycle, samples=samples
    )


def run_trajectory(
    cfg: NRConfig,
    budget: int,
    *,
    start: StartCase | None = StartCase.POSITIVE_REAL,
    z0: mpc | None = None,
    fast: bool = False,
    anchor: int | None = None,
    cycle_tol: float = 1e-6,
    reanchor: int = 10_000,
    trace: TraceHook | None = None,
    verify_steps: int = 1_000,
) -> TrajectoryRun:
    """Iterate up to ``budget`` chords, optionally stopping at a confirmed cycle.

    Records are the steps where 1 - cos(psi_k - psi_0) sets a strict new
    minimum; step 1 is always the first record.
    """
    logger.info(
        "Recording vertices whose return distance drops below the running minimum"
    )
    state = start_state(cfg, start, z0)
    search = _CycleSearch(anchor, cycle_tol) if anchor is not None else None
    sample_every = max(1, budget // 5000)
    if fast:
        return _run_fast(cfg, state, budget, search, trace, sample_every, reanchor)
    return _run_mp(cfg, state, budget, search, trace, sample_every, verify_steps)


def _closing_offset(cfg: NRConfig, z: mpc, steps: int) -> mpf:
    state = start_state(cfg, None, z)
    for _ in range(steps):
        state = nr_step(state, cfg)
    start_angle = mp.arg(z)
    offset = mp.atan2(state.sin_psi, state.cos_psi) - start_angle
    return (offset + mp.pi) % (2 * mp.pi) - mp.pi


def conjugate_cycle_product(cfg: NRConfig, cycle: CycleReport) -> mpf:
    """Product over the polygon reflected in the real axis; about 1 / P_N."""
    vertex = cycle.vertices[-1] if cycle.vertices else None
    if vertex is None:
        msg = "Cycle report carries no vertices"
        raise DomainError(msg)
    state = start_state(cfg, None, mp.conj(vertex.to_complex()))
    for _ in range(cycle.period):
        zeta = chord_tangent_point(cfg, state)
        nxt = nr_step(state, cfg)
        state = h_update(nxt, zeta, state.vertex, nxt.vertex)
    return state.h


def offset_cycle_sides(
    cfg: NRConfig, cycle: CycleReport, delta: float = 1e-4
) -> tuple[mpf, mpf]:
    """Angular offsets after one period for starts just before and after a vertex."""
    base = cycle.vertices[-1].to_complex()
    shift = mp.expj(mpf(delta))
    return (
        _closing_offset(cfg, base * shift, cycle.period),
        _closing_offset(cfg, base / shift, cycle.period),
    )


def classify_dynamics(
    cfg: NRConfig,
    budget: int,
    *,
    start: StartCase | None = StartCase.POSITIVE_REAL,
    z0: mpc | None = None,
    fast: bool | None = None,
    cycle_tol: float = 1e-6,
    margin: float = 1e-3,
    reanchor: int = 10_000,
    trace: TraceHook | None = None,
    check_conjugate: bool = False,
    side_delta: float = 1e-4,
) -> DynamicsVerdict:
    """Regular, attractive, repelling or undecided, from one trajectory.

    With a free start z0 the cycle search is anchored at z0; otherwise it is
    anchored halfway through the budget, after transients. A confirmed cycle
    is judged by its multiplier product. A product within ``margin`` of 1
    is tested from both sides of a vertex: equal nonzero offsets mean
    one-sided attraction, vanishing offsets mean a closed porism.

    Raises:
        DomainError: If the boundary is not inside the unit circle or does
            not surround the origin
    """
    boundary = boundary_trace(cfg, 360)
    if boundary.max_support >= 1:
        msg = f"Boundary reaches the unit circle (support {boundary.max_support:.6f})"
        raise DomainError(msg)
    if boundary.min_support <= 0:
        msg = f"Boundary does not surround the origin (support {boundary.min_support:.6f})"
        raise DomainError(msg)

    fast = budget > FAST_PATH_THRESHOLD if fast is None else fast
    anchor = 0 if z0 is not None else budget // 2
    run = run_trajectory(
        cfg,
        budget,
        start=start,
        z0=z0,
        fast=fast,
        anchor=anchor,
        cycle_tol=cycle_tol,
        reanchor=reanchor,
        trace=trace,
    )
    state = run.state
    rotation = state.rotation_estimate()
    common: dict[str, Any] = {
        "evidence": mpf(run.slope),
        "log_h_spread": state.log_h_max - state.log_h_min,
        "steps": run.steps,
        "rotation": rotation,
    }
    floor = FLOAT_FLOOR if fast else float(closure_threshold())

    cycle = run.cycle
    if cycle is not None:
        product = cycle.product
        conjugate = conjugate_cycle_product(cfg, cycle) if check_conjugate else None
        extra = {
            "period": cycle.period,
            "product": product,
            "cycle": cycle,
            "conjugate_product": conjugate,
        }
        if product < 1 - margin:
            logger.info(
                "Attractive %d-gon, product %s", cycle.period, mp.nstr(product, 10)
            )
            return DynamicsVerdict(kind=VerdictKind.ATTRACTIVE, **extra, **common)
        if product > 1 + margin:
            logger.info(
                "Repelling %d-gon, product %s", cycle.period, mp.nstr(product, 10)
            )
            return DynamicsVerdict(kind=VerdictKind.REPELLING, **extra, **common)
        if cycle.return_distance < floor:
            ahead, behind = offset_cycle_sides(cfg, cycle, side_delta)
            if max(abs(ahead), abs(behind)) < closure_threshold():
                logger.info("Every start closes after %d sides", cycle.period)
                return DynamicsVerdict(
                    kind=VerdictKind.REGULAR,
                    table=_table(state, rotation),
                    **extra,
                    **common,
                )
            if mp.sign(ahead) == mp.sign(behind):
                logger.info("%d-gon attracts from one side only", cycle.period)
                return DynamicsVerdict(
                    kind=VerdictKind.ATTRACTIVE, one_sided=True, **extra, **common
                )
            return DynamicsVerdict(kind=VerdictKind.UNDECIDED, **extra, **common)
        logger.info("Near-return of period %d is quasi-periodic", cycle.period)

    trend = log_h_trend(run.samples)
    if trend:
        logger.info("log h trends at %.3g per step without a detected cycle", run.slope)
        return DynamicsVerdict(kind=VerdictKind.UNDECIDED, trend=trend, **common)
    return DynamicsVerdict(
        kind=VerdictKind.REGULAR, table=_table(state, rotation), **common
    )


def _table(state: TrajectoryState, rotation: mpf) -> ConvergentTable | None:
    try:
        return cf_engine.recover_numerators(
            state.records[1:], allow_provisional=True, rotation=rotation
        )
    except ConvergentError as e:
        logger.warning("Records do not form a convergent table: %s", e)
        return None
