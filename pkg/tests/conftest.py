"""Shared fixtures: worked configurations and their published tables."""

from __future__ import annotations

import pytest
from mpmath import mp

from poncelet_ratio.models.dynamics import NRConfig
from poncelet_ratio.models.geometry import CirclePair, EllipseConfig

CIRCLE_THETA = "0.418833985394304193770083"

CIRCLE_Q = [
    2, 5, 7, 12, 31, 43, 74, 117, 191, 308, 1115, 9228, 56483, 291643, 348126,
    1336021, 1684147, 6388462, 14461071, 237765598, 252226669, 489992267,
    1232211203, 21437582718, 2702367633671,
]  # fmt: skip

CIRCLE_P = [
    1, 2, 3, 5, 13, 18, 31, 49, 80, 129, 467, 3865, 23657, 122150, 145807,
    559571, 705378, 2675705, 6056788, 99584313, 105641101, 205225414,
    516091929, 8978788207, 1131843406011,
]  # fmt: skip

CIRCLE_DISTANCES = [
    0.570, 0.312, 0.222, 0.0837, 0.0519, 0.0317, 0.0202, 0.0115, 0.00869,
    0.00278, 0.000341, 0.0000552, 0.00000954, 0.00000755,
]  # fmt: skip

ELLIPSE_Q = [3, 13, 16, 45, 151, 196, 1327, 12139, 25605, 37744, 214325, 252069]
ELLIPSE_A = [3, 4, 1, 2, 3, 1, 6, 9, 2, 1, 5, 1]
ELLIPSE_P = [1, 4, 5, 14, 47, 61, 413, 3778, 7969, 11747, 66704, 78451]

ZERO_DIAGONAL_Q = [2, 3, 8, 11, 19, 182, 201, 383, 10925]
ZERO_DIAGONAL_P = [1, 1, 3, 4, 7, 67, 74, 141, 4022]

DIAGONAL_Q = [2, 3, 5, 58, 179, 416, 2259, 13970, 44169, 58139]
DIAGONAL_P = [1, 1, 2, 23, 71, 165, 896, 5541, 17519, 23060]


@pytest.fixture(autouse=True)
def precision():
    """Run every test at 64 working digits and restore the global context."""
    with mp.workdps(64):
        yield


@pytest.fixture
def circle_pair() -> CirclePair:
    return CirclePair.from_center_radius("0.5", "0.2")


@pytest.fixture
def chapple_pair() -> CirclePair:
    return CirclePair.from_center_radius("0.2", "0.48")


@pytest.fixture
def ellipse() -> EllipseConfig:
    return EllipseConfig.from_axes("0.5", "0.4", "0.4")


@pytest.fixture
def zero_diagonal() -> NRConfig:
    return NRConfig.create("0.6", "0.4", "0.4")


@pytest.fixture
def diagonal() -> NRConfig:
    return NRConfig.create("0.2", "0.4", "0.4", "0.1", "0.35", "0.1")
