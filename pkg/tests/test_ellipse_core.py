from __future__ import annotations

import pytest
from conftest import CIRCLE_Q, ELLIPSE_A, ELLIPSE_P, ELLIPSE_Q
from mpmath import mp, mpc, mpf

from poncelet_ratio.models.geometry import CirclePair, EllipseConfig, WeightSpec
from poncelet_ratio.services import circle_core, ellipse_core
from poncelet_ratio.utils.exceptions import DomainError, PrecisionError
from poncelet_ratio.validators import ValidationError


def test_weights_from_ellipse(ellipse):
    weights = ellipse_core.weights_from_ellipse(ellipse)
    assert abs(weights.alpha0 - mpf("0.2356")) < mpf(10) ** -60
    assert abs(weights.alpha1 - mpf("0.064")) < mpf(10) ** -60
    assert abs(weights.alpha2 + mpf("0.09")) < mpf(10) ** -60
    assert abs(weights.cos_psi1 - mpf(5) / 27) < mpf(10) ** -60


def test_ellipse_from_weights(ellipse):
    spec = WeightSpec.create("0.2356", "0.064", "-0.09", mpf(5) / 27)
    cfg = ellipse_core.ellipse_from_weights(spec)
    assert abs(cfg.a - ellipse.a) < mpf(10) ** -40
    assert abs(cfg.b - ellipse.b) < mpf(10) ** -40
    assert abs(cfg.c - ellipse.c) < mpf(10) ** -40


def test_ellipse_from_weights_rejects_inconsistent_start():
    spec = WeightSpec.create("0.2356", "0.064", "-0.09", "0.9")
    with pytest.raises(DomainError):
        ellipse_core.ellipse_from_weights(spec)


def test_ellipse_outside_the_circle_is_rejected():
    with pytest.raises(ValidationError):
        EllipseConfig.from_axes("0.7", "0.4", "0.4")


def test_chords_stay_tangent(ellipse):
    z_prev, z_cur = mpc(1), ellipse_core.first_chord(ellipse)
    for _ in range(25):
        assert abs(ellipse_core.ellipse_chord_residual(z_prev, z_cur, ellipse)) < mpf(10) ** -50
        z_next = ellipse_core.ellipse_next_vertex(z_prev, z_cur, ellipse)
        z_prev, z_cur = z_cur, z_next / abs(z_next)


def test_record_scan_leading_records(ellipse):
    records = ellipse_core.ellipse_record_scan(ellipse, budget=200, max_records=5)
    assert [record.q for record in records] == ELLIPSE_Q[:5]
    deltas = [record.distance for record in records]
    assert deltas == sorted(deltas, reverse=True)


def test_equal_axes_reproduce_the_circle_records():
    cfg = EllipseConfig.from_axes("0.2", "0.2", "0.5")
    records = ellipse_core.ellipse_record_scan(cfg, budget=400, max_records=10)
    circle = circle_core.vertex_scan(CirclePair.from_center_radius("0.5", "0.2"), 400)
    assert [record.q for record in records] == [record.q for record in circle]
    assert [record.q for record in records] == CIRCLE_Q[:10]


def test_near_ties_are_retested_at_higher_precision(ellipse, monkeypatch):
    calls = []
    original = ellipse_core._deltas_at

    def spy(*args):
        calls.append(args[-1])
        return original(*args)

    monkeypatch.setattr(ellipse_core, "tolerance", lambda *_: mpf("0.5"))
    monkeypatch.setattr(ellipse_core, "_deltas_at", spy)
    records = ellipse_core.ellipse_record_scan(ellipse, budget=200, max_records=5)
    assert [record.q for record in records] == ELLIPSE_Q[:5]
    assert calls


def test_unresolved_tie_raises(ellipse, monkeypatch):
    monkeypatch.setattr(ellipse_core, "tolerance", lambda *_: mpf("0.5"))
    monkeypatch.setattr(ellipse_core, "_deltas_at", lambda *_: [mpf(1), mpf(1)])
    with pytest.raises(PrecisionError, match="not separated"):
        ellipse_core.ellipse_record_scan(ellipse, budget=200, max_records=5)


def test_ratio_scan_table(ellipse):
    table = ellipse_core.ellipse_ratio_scan(ellipse, budget=2_000, max_records=7)
    assert table.denominators == ELLIPSE_Q[:7]
    assert table.partial_quotients == ELLIPSE_A[:7]
    assert table.numerators == ELLIPSE_P[:7]


@pytest.mark.slow
def test_ratio_scan_through_twelve_records():
    with mp.workdps(50):
        cfg = EllipseConfig.from_axes("0.5", "0.4", "0.4")
        table = ellipse_core.ellipse_ratio_scan(cfg, budget=260_000, max_records=12)
    assert table.denominators == ELLIPSE_Q
    assert table.numerators == ELLIPSE_P
