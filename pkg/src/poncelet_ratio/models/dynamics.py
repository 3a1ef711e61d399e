"""Value types for polygon dynamics around numerical-range boundaries."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import TYPE_CHECKING

from mpmath import mp, mpf

from ..utils.precision import to_mpf
from ..validators.geometry import MatrixEntriesValidator

if TYPE_CHECKING:
    from .convergents import ConvergentTable
    from .geometry import UnitVertex


class StartCase(Enum):
    """Starting vertices with closed-form first tangency."""

    POSITIVE_REAL = "3"
    NEGATIVE_REAL = "4"
    OFF_AXIS = "5"


class VerdictKind(Enum):
    """Classification of an interscribed-polygon trajectory."""

    REGULAR = "regular"
    ATTRACTIVE = "attractive"
    REPELLING = "repelling"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class NRConfig:
    """Upper-triangular matrix [[c1, b1, a], [0, c2, b2], [0, 0, c3]].

    The alphas are the coefficients of the characteristic polynomial of
    Re(exp(-i phi) T), cached at construction.
    """

    a: mpf
    b1: mpf
    b2: mpf
    c1: mpf = mpf(0)
    c2: mpf = mpf(0)
    c3: mpf = mpf(0)
    alphas: tuple[mpf, mpf, mpf, mpf, mpf] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alphas", self.derive_alphas())

    @classmethod
    def create(
        cls,
        a: str | float | mpf,
        b1: str | float | mpf,
        b2: str | float | mpf,
        c1: str | float | mpf = 0,
        c2: str | float | mpf = 0,
        c3: str | float | mpf = 0,
    ) -> NRConfig:
        entries = {
            "a": to_mpf(a),
            "b1": to_mpf(b1),
            "b2": to_mpf(b2),
            "c1": to_mpf(c1),
            "c2": to_mpf(c2),
            "c3": to_mpf(c3),
        }
        MatrixEntriesValidator().validate(entries)
        return cls(**entries)

    def derive_alphas(self) -> tuple[mpf, mpf, mpf, mpf, mpf]:
        a, b1, b2, c1, c2, c3 = self.a, self.b1, self.b2, self.c1, self.c2, self.c3
        return (
            c1 + c2 + c3,
            c1 * c2 + c2 * c3 + c3 * c1,
            (a * a + b1 * b1 + b2 * b2) / 4,
            c1 * c2 * c3,
            (c1 * b2 * b2 + c2 * a * a + c3 * b1 * b1 - a * b1 * b2) / 4,
        )

    def matrix(self) -> mp.matrix:
        return mp.matrix(
            [
                [self.c1, self.b1, self.a],
                [0, self.c2, self.b2],
                [0, 0, self.c3],
            ]
        )


@dataclass
class TrajectoryState:
    """Current vertex, tangency and density bookkeeping of a trajectory.

    ``lambda_sq`` is the squared cosine of half the angle subtended by the
    next chord. ``log_h`` is the natural logarithm of the density value,
    seeded at 0.
    """

    k: int
    cos_psi: mpf
    sin_psi: mpf
    lambda_sq: mpf
    log_h: mpf = mpf(0)
    log_h_min: mpf = mpf(0)
    log_h_max: mpf = mpf(0)
    epsilon: mpf = mpf(10)
    records: list[int] = field(default_factory=list)
    cos_psi0: mpf = mpf(1)
    sin_psi0: mpf = mpf(0)
    turned: mpf = mpf(0)

    @property
    def h(self) -> mpf:
        return mp.exp(self.log_h)

    @property
    def vertex(self) -> mp.mpc:
        return mp.mpc(self.cos_psi, self.sin_psi)

    def rotation_estimate(self) -> mpf:
        """Average angular advance per chord, as a fraction of a full turn."""
        if self.k == 0:
            return mpf(0)
        return self.turned / (2 * mp.pi * self.k)


@dataclass(frozen=True)
class CycleReport:
    """A closed interscribed polygon found along a trajectory."""

    period: int
    product: mpf
    anchor_index: int
    vertices: list[UnitVertex]
    return_distance: mpf
    confirm_distance: mpf = mpf(0)


@dataclass(frozen=True)
class DynamicsVerdict:
    """Outcome of a trajectory classification.

    Attributes:
        kind: Regular, attractive, repelling or undecided
        period: Number of sides of a detected cycle
        product: Product of the density multipliers over that cycle
        evidence: Least-squares slope of log h per step over the second half
        log_h_spread: log(h_max / h_min) over the run
        steps: Number of steps taken
        rotation: Rotation-number estimate
        table: Convergent table of record indices
        cycle: Detected cycle details
        one_sided: Cycle with unit product that attracts from one side only
        conjugate_product: Product over the reflected polygon, when computed
        trend: Sign of a sustained log h drift when no cycle was found
    """

    kind: VerdictKind
    period: int | None = None
    product: mpf | None = None
    evidence: mpf = mpf(0)
    log_h_spread: mpf = mpf(0)
    steps: int = 0
    rotation: mpf | None = None
    table: ConvergentTable | None = None
    cycle: CycleReport | None = None
    one_sided: bool = False
    conjugate_product: mpf | None = None
    trend: int = 0
