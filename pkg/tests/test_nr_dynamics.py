from __future__ import annotations

import math
from dataclasses import replace

import pytest
from conftest import DIAGONAL_Q, ZERO_DIAGONAL_Q
from mpmath import mp, mpc, mpf

from poncelet_ratio.models.dynamics import NRConfig, StartCase, VerdictKind
from poncelet_ratio.models.geometry import CirclePair
from poncelet_ratio.services import circle_core, nr_dynamics
from poncelet_ratio.utils.exceptions import DomainError
from poncelet_ratio.utils.precision import closure_threshold

PENTAGON = [
    (-0.997219, 0.074522),
    (0.938000, -0.346636),
    (0.045972, 0.998943),
    (-0.253912, -0.967227),
    (0.970625, 0.240598),
]

CYCLE_START = mpc(
    "0.997910504956172999592891236", "-0.064611331035011368320516583"
)


@pytest.fixture(autouse=True)
def trajectory_precision(precision):
    with mp.workdps(34):
        yield


def test_alphas_of_a_zero_diagonal_matrix(zero_diagonal):
    al1, al2, al3, al4, al5 = zero_diagonal.alphas
    assert al1 == al2 == al4 == 0
    assert abs(al3 - mpf("0.17")) < mpf(10) ** -30
    assert abs(al5 + mpf("0.024")) < mpf(10) ** -30


@pytest.mark.parametrize(
    ("start", "expected"),
    [(StartCase.POSITIVE_REAL, "0.194"), (StartCase.NEGATIVE_REAL, "0.146")],
)
def test_closed_form_starts(zero_diagonal, start, expected):
    state = nr_dynamics.start_state(zero_diagonal, start)
    assert abs(state.lambda_sq - mpf(expected)) < mpf(10) ** -30
    residual = nr_dynamics.forward_residual(
        zero_diagonal.alphas, state.cos_psi, state.sin_psi, state.lambda_sq
    )
    assert abs(residual) < mpf(10) ** -30


def test_off_axis_start_needs_a_zero_diagonal(zero_diagonal, diagonal):
    state = nr_dynamics.start_state(zero_diagonal, StartCase.OFF_AXIS)
    assert abs(state.lambda_sq - zero_diagonal.alphas[2]) < mpf(10) ** -30
    with pytest.raises(DomainError, match="zero diagonal"):
        nr_dynamics.start_state(diagonal, StartCase.OFF_AXIS)


def test_free_start_solves_the_forward_tangency(diagonal):
    z0 = mp.expj(mpf("0.3"))
    state = nr_dynamics.start_state(diagonal, None, z0)
    assert 0 < state.lambda_sq < 1
    residual = nr_dynamics.forward_residual(
        diagonal.alphas, state.cos_psi, state.sin_psi, state.lambda_sq
    )
    assert abs(residual) < closure_threshold()


def test_steps_keep_chords_tangent(diagonal):
    state = nr_dynamics.start_state(diagonal)
    for _ in range(30):
        z = state.vertex
        nxt = nr_dynamics.nr_step(state, diagonal, verify=True)
        assert abs(nr_dynamics.chord_determinant(diagonal, z, nxt.vertex)) < mpf(10) ** -25
        assert abs(abs(nxt.vertex) - 1) < mpf(10) ** -30
        state = nxt


def test_density_multiplier_closed_form(diagonal):
    state = nr_dynamics.start_state(diagonal)
    for _ in range(5):
        state = nr_dynamics.nr_step(state, diagonal)
    lam, mu = mp.sqrt(state.lambda_sq), mp.sqrt(1 - state.lambda_sq)
    cos_phi = state.cos_psi * lam - state.sin_psi * mu
    sin_phi = state.sin_psi * lam + state.cos_psi * mu
    slope = nr_dynamics.support_derivative(diagonal.alphas, lam, cos_phi, sin_phi)

    zeta = nr_dynamics.chord_tangent_point(diagonal, state)
    nxt = nr_dynamics.nr_step(state, diagonal)
    updated = nr_dynamics.h_update(nxt, zeta, state.vertex, nxt.vertex)
    ratio = mp.exp(updated.log_h - state.log_h)
    assert ratio > 0
    assert abs(ratio - (mu - slope) / (mu + slope)) < mpf(10) ** -25


def test_tangent_point_lies_on_the_boundary(diagonal):
    phi = mpf("0.8")
    implicit = nr_dynamics.nr_support_point(diagonal, phi, method="implicit")
    difference = nr_dynamics.nr_support_point(diagonal, phi)
    assert abs(implicit - difference) < mpf(10) ** -12
    lam = nr_dynamics.support_eigenvalues(diagonal, phi)[-1]
    assert abs(mp.re(mp.expj(-phi) * implicit) - lam) < mpf(10) ** -30
    assert abs(nr_dynamics.char_poly(diagonal.alphas, lam, mp.cos(phi))) < mpf(10) ** -28
    with pytest.raises(ValueError, match="Unknown derivative method"):
        nr_dynamics.nr_support_point(diagonal, phi, method="secant")


def test_boundary_trace(zero_diagonal):
    trace = nr_dynamics.boundary_trace(zero_diagonal, 360)
    assert trace.points.shape == (360,)
    assert 0 < trace.max_support < 1


def test_boundary_outside_the_circle_is_rejected():
    cfg = NRConfig.create("2", "2", "2")
    with pytest.raises(DomainError):
        nr_dynamics.classify_dynamics(cfg, 100)


def test_boundary_must_surround_the_origin():
    cfg = NRConfig.create("0", "0.4", "0", "0.5", "0.5", "0.5")
    assert nr_dynamics.boundary_trace(cfg, 360).min_support < 0
    with pytest.raises(DomainError, match="does not surround the origin"):
        nr_dynamics.classify_dynamics(cfg, 100)


def test_disk_boundary_follows_the_circle_records():
    c, r = mpf("0.1"), mpf("0.5")
    cfg = NRConfig.create(0, 2 * r, 0, c, c, c)
    seen = {}

    def remember(k, *state):
        seen[k] = state[-1]

    run = nr_dynamics.run_trajectory(cfg, 300, trace=remember)
    circle = circle_core.vertex_scan(CirclePair.from_center_radius(c, r), 300)
    assert run.state.records[1:] == [record.q for record in circle]
    assert len(circle) >= 4
    for record in circle:
        assert abs(seen[record.q]) < record.distance


def test_records_of_a_zero_diagonal_matrix(zero_diagonal):
    run = nr_dynamics.run_trajectory(zero_diagonal, 400)
    assert run.state.records[0] == 1
    assert run.state.records[1:] == ZERO_DIAGONAL_Q[:8]
    assert run.state.log_h_max - run.state.log_h_min < 5


def test_trace_hook_sees_every_step(zero_diagonal):
    seen = []
    nr_dynamics.run_trajectory(zero_diagonal, 25, trace=lambda k, *_: seen.append(k))
    assert seen == list(range(1, 26))


def test_fast_path_matches_full_precision(diagonal):
    exact = nr_dynamics.run_trajectory(diagonal, 3_000)
    fast = nr_dynamics.run_trajectory(diagonal, 3_000, fast=True, reanchor=500)
    assert fast.state.records == exact.state.records
    assert abs(fast.state.log_h - exact.state.log_h) < 1e-6
    assert abs(fast.state.cos_psi - exact.state.cos_psi) < 1e-8


@pytest.mark.parametrize(("slope", "expected"), [("0.01", 1), ("-0.01", -1)])
def test_log_h_trend_reports_a_drift(slope, expected):
    samples = [(k, float(slope) * k) for k in range(0, 10_000, 50)]
    assert nr_dynamics.log_h_trend(samples) == expected


def test_bounded_log_h_has_no_trend():
    samples = [(k, 3 * math.sin(k / 40)) for k in range(0, 10_000, 50)]
    assert nr_dynamics.log_h_trend(samples) == 0
    assert nr_dynamics.log_h_trend(samples[:4]) == 0


def test_drift_without_a_cycle_is_undecided(zero_diagonal, monkeypatch):
    run = nr_dynamics.run_trajectory(zero_diagonal, 20)
    drifting = replace(
        run, slope=-0.01, cycle=None, samples=[(k, -0.01 * k) for k in range(0, 5_000, 25)]
    )
    monkeypatch.setattr(nr_dynamics, "run_trajectory", lambda *_, **__: drifting)
    verdict = nr_dynamics.classify_dynamics(zero_diagonal, 5_000)
    assert verdict.kind is VerdictKind.UNDECIDED
    assert verdict.trend == -1


def test_regular_verdict_carries_the_table(zero_diagonal):
    verdict = nr_dynamics.classify_dynamics(zero_diagonal, 2_000)
    assert verdict.kind is VerdictKind.REGULAR
    assert verdict.table.denominators == ZERO_DIAGONAL_Q[:8]
    assert verdict.steps == 2_000
    assert 0 < verdict.rotation < 1


@pytest.mark.slow
def test_zero_diagonal_records_through_10925(zero_diagonal):
    run = nr_dynamics.run_trajectory(zero_diagonal, 11_000)
    assert run.state.records[1:] == ZERO_DIAGONAL_Q


@pytest.mark.slow
def test_diagonal_records_through_58139(diagonal):
    run = nr_dynamics.run_trajectory(diagonal, 60_000, fast=True)
    assert run.state.records[1:] == DIAGONAL_Q


@pytest.mark.slow
def test_attractive_polygon_from_a_free_start():
    cfg = NRConfig.create("0.7200001", "0.72", "0.72")
    verdict = nr_dynamics.classify_dynamics(cfg, 40_000, z0=CYCLE_START)
    assert verdict.kind is VerdictKind.ATTRACTIVE
    assert verdict.period == 18337
    assert float(verdict.product) == pytest.approx(0.7029723633, rel=1e-6)


@pytest.mark.slow
def test_attractive_pentagon():
    cfg = NRConfig.create("0.21", "0.2", "0.2", c2="0.66")
    verdict = nr_dynamics.classify_dynamics(cfg, 20_000, check_conjugate=True)
    assert verdict.kind is VerdictKind.ATTRACTIVE
    assert verdict.period == 5
    found = [(float(v.re), float(v.im)) for v in verdict.cycle.vertices]
    for x, y in PENTAGON:
        assert min(abs(x - fx) + abs(y - fy) for fx, fy in found) < 2e-5
    assert float(verdict.conjugate_product * verdict.product) == pytest.approx(1, rel=1e-6)
    assert verdict.evidence < 0


@pytest.mark.slow
def test_cardioid_threshold_regular_side():
    cfg = NRConfig.create("0.618033974844", "0.618034", "0.618034")
    verdict = nr_dynamics.classify_dynamics(cfg, 3_000)
    assert verdict.kind is VerdictKind.REGULAR


@pytest.mark.slow
def test_cardioid_threshold_attractive_side():
    cfg = NRConfig.create("0.618035210911", "0.618033", "0.618033")
    verdict = nr_dynamics.classify_dynamics(cfg, 3_000)
    assert verdict.kind is VerdictKind.ATTRACTIVE
    assert verdict.period == 3
    assert verdict.one_sided
