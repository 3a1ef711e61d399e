"""Value types for circle pairs, ellipses and the associated cubic curve."""

from __future__ import annotations

from dataclasses import dataclass, field

from mpmath import mp, mpc, mpf

from ..utils.precision import to_mpf
from ..validators.geometry import (
    CirclePairValidator,
    ConcentricValidator,
    EllipseValidator,
    IntegralSpecValidator,
)


@dataclass(frozen=True)
class CirclePair:
    """Inner circle of center c and radius r nested in the unit circle.

    ``I`` is the pencil invariant (1 + c^2 - r^2) / (2c); it is infinite for
    the concentric pair.
    """

    c: mpf
    r: mpf
    I: mpf  # noqa: E741

    @classmethod
    def from_center_radius(cls, c: str | float | mpf, r: str | float | mpf) -> CirclePair:
        """Create a validated nested pair.

        Raises:
            ValidationError: If the circles are not strictly nested
        """
        c, r = to_mpf(c), to_mpf(r)
        CirclePairValidator().validate((c, r))
        return cls(c=c, r=r, I=(1 + c * c - r * r) / (2 * c))

    @classmethod
    def concentric(cls, r: str | float | mpf) -> CirclePair:
        """Create the pair with c = 0; only vertex operations apply to it."""
        r = to_mpf(r)
        ConcentricValidator().validate(r)
        return cls(c=mpf(0), r=r, I=mp.inf)

    @property
    def is_concentric(self) -> bool:
        return self.c == 0

    @property
    def cos_phi1(self) -> mpf:
        """Cosine of the first vertex angle of the orbit starting at z = 1."""
        return 2 * self.r**2 / (1 - self.c) ** 2 - 1


@dataclass(frozen=True)
class IntegralSpec:
    """Upper limit psi and squared modulus k2 of F(psi, k), with output digits."""

    psi: mpf
    k2: mpf
    digits: int = 24

    @classmethod
    def create(
        cls, psi: str | float | mpf, k2: str | float | mpf, digits: int = 24
    ) -> IntegralSpec:
        psi, k2 = to_mpf(psi), to_mpf(k2)
        IntegralSpecValidator().validate((psi, k2, digits))
        return cls(psi=psi, k2=k2, digits=digits)


@dataclass(frozen=True)
class UnitVertex:
    """Point (cos phi, sin phi) of the unit circle."""

    re: mpf
    im: mpf

    @classmethod
    def from_complex(cls, z: mpc) -> UnitVertex:
        return cls(re=mp.re(z), im=mp.im(z))

    def to_complex(self) -> mpc:
        return mpc(self.re, self.im)


@dataclass(frozen=True)
class RecordTriple:
    """Record index q with its gamma value and the curve ordinate y."""

    q: int
    gamma: mpf
    y: mpf


@dataclass(frozen=True)
class VertexRecord:
    """Record found by direct vertex iteration: index and distance |z_q - 1|."""

    q: int
    distance: mpf


@dataclass(frozen=True)
class CurvePoint:
    """Point (z, y) of y^2 = 4cr^2 (z^3 - 2Iz^2 + z), or the identity."""

    z: mpf | mpc = mpf(0)
    y: mpf | mpc = mpf(0)
    is_identity: bool = False

    @classmethod
    def identity(cls) -> CurvePoint:
        return cls(is_identity=True)

    def negate(self) -> CurvePoint:
        if self.is_identity:
            return self
        return CurvePoint(z=self.z, y=-self.y)


@dataclass(frozen=True)
class GeneratorPoint:
    """Translation point (Z, W, Y) shared by every pair of consecutive chords."""

    Z: mpf
    W: mpf
    Y: mpf

    def as_curve_point(self) -> CurvePoint:
        return CurvePoint(z=self.Z, y=self.Y)


@dataclass
class GiantStepState:
    """Mutable state of one giant-step set.

    The anchor record stays fixed for the whole set; ``cur`` advances by
    anchor.q per step starting from the previous record.
    """

    pair: CirclePair
    anchor: RecordTriple
    cur: RecordTriple
    rho_anchor: mpf = field(default=mpf(0))
    eps_anchor: mpf = field(default=mpf(0))
    W_anchor: mpf = field(default=mpf(0))
    Y_anchor: mpf = field(default=mpf(0))
    steps: int = 0

    @classmethod
    def start(
        cls, pair: CirclePair, previous: RecordTriple, anchor: RecordTriple
    ) -> GiantStepState:
        """Initialize a set from the two most recent records."""
        c, I = pair.c, pair.I
        g2 = anchor.gamma**2
        rho = mp.sqrt(1 - 2 * I * c * g2 + c * c * g2 * g2)
        W = 1 / (c * g2)
        return cls(
            pair=pair,
            anchor=anchor,
            cur=previous,
            rho_anchor=rho,
            eps_anchor=c * g2 * (2 * I - c * g2) / (1 + rho),
            W_anchor=W,
            Y_anchor=-anchor.y * W * W,
        )


@dataclass(frozen=True)
class EllipseConfig:
    """Ellipse (x - c)^2 / a^2 + y^2 / b^2 = 1 with a >= b > 0."""

    a: mpf
    b: mpf
    c: mpf

    @classmethod
    def from_axes(
        cls, a: str | float | mpf, b: str | float | mpf, c: str | float | mpf
    ) -> EllipseConfig:
        a, b, c = to_mpf(a), to_mpf(b), to_mpf(c)
        EllipseValidator().validate((a, b, c))
        return cls(a=a, b=b, c=c)


@dataclass(frozen=True)
class WeightSpec:
    """Integrand weights alpha0, alpha1, alpha2 and the start-chord cosine."""

    alpha0: mpf
    alpha1: mpf
    alpha2: mpf
    cos_psi1: mpf

    @classmethod
    def create(
        cls,
        alpha0: str | float | mpf,
        alpha1: str | float | mpf,
        alpha2: str | float | mpf,
        cos_psi1: str | float | mpf,
    ) -> WeightSpec:
        return cls(
            alpha0=to_mpf(alpha0),
            alpha1=to_mpf(alpha1),
            alpha2=to_mpf(alpha2),
            cos_psi1=to_mpf(cos_psi1),
        )

    def weight(self, phi: mpf) -> mpf:
        """Integrand 1 / sqrt(alpha0 - 2 alpha1 cos phi + alpha2 cos^2 phi)."""
        cos = mp.cos(phi)
        return 1 / mp.sqrt(self.alpha0 - 2 * self.alpha1 * cos + self.alpha2 * cos**2)


@dataclass(frozen=True)
class ThetaMeasure:
    """Invariant measure on the unit circle for pencil invariant I."""

    I: mpf  # noqa: E741
    normalization: mpf
    phi: mpf

    def density(self, x: mpf) -> mpf:
        """Density h(x) = pi / (Phi(pi, I) sqrt(I - cos 2 pi x)) on [0, 1]."""
        return mp.pi / (self.normalization * mp.sqrt(self.I - mp.cos(2 * mp.pi * x)))
