from __future__ import annotations

import random

import pytest
from conftest import CIRCLE_THETA, ELLIPSE_P, ELLIPSE_Q
from mpmath import mp, mpf

from poncelet_ratio.models.geometry import WeightSpec
from poncelet_ratio.services import circle_core, oracle
from poncelet_ratio.utils.exceptions import DomainError


def test_complete_integral_at_zero_modulus():
    assert abs(oracle.complete_F(mpf(0), 30) - mp.pi / 2) < mpf(10) ** -30


def test_complete_integral_methods_agree():
    agm = oracle.complete_F(mpf("0.5"), 30)
    quadrature = oracle.complete_F_quadrature(mpf("0.5"), 30)
    assert abs(agm - quadrature) < mpf(10) ** -30
    assert mp.nstr(agm, 19) == "1.854074677301371918"


@pytest.mark.parametrize("seed", range(3))
def test_agm_restatement(seed):
    k2 = mpf(random.Random(seed).uniform(0.05, 0.95))
    value = oracle.complete_F(k2, 40)
    assert abs(value * mp.agm(1, mp.sqrt(1 - k2)) - mp.pi / 2) < mpf(10) ** -40


def test_complete_integral_rejects_bad_modulus():
    with pytest.raises(DomainError):
        oracle.complete_F(mpf(1))


def test_phi_integral_edges():
    assert oracle.phi_integral(mpf(0), mpf("1.21")) == 0
    full = oracle.phi_integral(2 * mp.pi, mpf("1.21"), 30)
    half = oracle.phi_integral(mp.pi, mpf("1.21"), 30)
    assert abs(full - 2 * half) < mpf(10) ** -30
    with pytest.raises(DomainError):
        oracle.phi_integral(mpf(1), mpf("0.9"))


def test_phi_pi_through_the_agm():
    I = mpf("1.21")  # noqa: E741
    assert abs(oracle.phi_pi_from_agm(I, 30) - oracle.phi_integral(mp.pi, I, 30)) < mpf(10) ** -30


def test_circle_theta_matches_the_published_value(circle_pair):
    theta = oracle.circle_theta(circle_pair, 30)
    assert abs(theta - mpf(CIRCLE_THETA)) < mpf(10) ** -22
    assert abs(oracle.circle_theta_legendre(circle_pair, 30) - theta) < mpf(10) ** -30


@pytest.mark.parametrize("seed", range(2))
def test_density_is_normalized_and_symmetric(seed):
    I = mpf(random.Random(seed).uniform(1.05, 3.0))  # noqa: E741
    measure = oracle.theta_measure(I, mp.pi, 30)
    total = mp.quad(measure.density, [0, mpf(1) / 2, 1])
    assert abs(total - 1) < mpf(10) ** -25
    for x in (mpf("0.1"), mpf("0.37")):
        assert abs(measure.density(x) - measure.density(1 - x)) < mpf(10) ** -40


def test_every_tangential_chord_has_the_same_measure(circle_pair):
    z_prev, z_cur = circle_core.initial_vertices(circle_pair)
    start = mp.arg(z_prev)
    measures = []
    for _ in range(5):
        step = mp.arg(z_cur / z_prev) % (2 * mp.pi)
        measures.append(oracle.chord_integral(start, start + step, circle_pair.I, 30))
        start += step
        z_prev, z_cur = z_cur, circle_core.next_vertex(z_prev, z_cur, circle_pair)
    for value in measures[1:]:
        assert abs(value - measures[0]) < mpf(10) ** -28


def test_incomplete_integral_is_monotone():
    k2 = mpf("0.5")
    values = [oracle.incomplete_F(mpf(psi), k2, 30) for psi in ("0.2", "0.7", "1.2")]
    assert values == sorted(values)
    assert abs(oracle.incomplete_F(mp.pi / 2, k2, 30) - oracle.complete_F(k2, 30)) < mpf(10) ** -30


def test_ellipse_theta_is_bracketed_by_the_table():
    weights = WeightSpec.create("0.2356", "0.064", "-0.09", mpf(5) / 27)
    theta = oracle.ellipse_theta(weights, 30)
    assert mpf(ELLIPSE_P[-1]) / ELLIPSE_Q[-1] < theta < mpf(ELLIPSE_P[-2]) / ELLIPSE_Q[-2]
