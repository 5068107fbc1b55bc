"""Planar symplectic vector algebra.

Everything in this package is built from four primitives on 2-vectors:
addition, scaling, the dot product, and the quarter-turn operator
:func:`tilde`.  The combination ``dot(tilde(a), b)`` is the perp-dot
(symplectic) product :func:`symp`: the signed area of the parallelogram
spanned by ``a`` and ``b``.

Sign conventions, fixed once here and relied on everywhere else:

* ``tilde`` rotates counterclockwise by pi/2, so ``symp(a, b) > 0`` when
  the turn from ``a`` to ``b`` is counterclockwise;
* the two products are compatible through ``dot(a, b) == symp(a, tilde(b))``;
* angles are reported in the half-open interval ``(-pi, pi]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateScaleError, ZeroVectorError

#: Absolute floor for approximate comparisons and degeneracy thresholds.
ATOL = 1e-12
#: Relative factor applied to the operand scale in approximate comparisons.
RTOL = 1e-9


def close(lhs: float, rhs: float, *, atol: float = ATOL, rtol: float = RTOL,
          scale: float | None = None) -> bool:
    """``|lhs - rhs| <= atol + rtol*scale``, scale defaulting to the larger operand."""
    if scale is None:
        scale = max(abs(lhs), abs(rhs))
    return abs(lhs - rhs) <= atol + rtol * scale


def wrap_angle(theta: float) -> float:
    """Normalize an angle to ``(-pi, pi]``."""
    wrapped = math.remainder(theta, math.tau)
    return wrapped + math.tau if wrapped <= -math.pi else wrapped


@dataclass(frozen=True, slots=True)
class Vec2:
    """Planar vector, also used as a point relative to a fixed origin.

    Components must be finite; arithmetic that would produce NaN or an
    infinity is rejected at construction time rather than propagated.
    """

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"Vec2 components must be finite, got ({self.x}, {self.y})")

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __mul__(self, scalar: float) -> Vec2:
        return Vec2(self.x * scalar, self.y * scalar)

    def __rmul__(self, scalar: float) -> Vec2:
        return Vec2(scalar * self.x, scalar * self.y)

    def __truediv__(self, scalar: float) -> Vec2:
        return Vec2(self.x / scalar, self.y / scalar)


@dataclass(frozen=True)
class Polar:
    """Signed-magnitude polar form ``magnitude * (cos(angle), sin(angle))``.

    The magnitude may be negative (a reflected direction); the angle is
    normalized into ``(-pi, pi]`` on construction.
    """

    magnitude: float
    angle: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.magnitude) and math.isfinite(self.angle)):
            raise ValueError("Polar fields must be finite")
        object.__setattr__(self, "angle", wrap_angle(self.angle))


def tilde(a: Vec2) -> Vec2:
    """Quarter-turn counterclockwise: ``(x, y) -> (-y, x)``."""
    return Vec2(-a.y, a.x)


def dot(a: Vec2, b: Vec2) -> float:
    """Euclidean inner product."""
    return a.x * b.x + a.y * b.y


def symp(a: Vec2, b: Vec2) -> float:
    """Perp-dot product: the signed area spanned by ``a`` and ``b``.

    Equal to ``dot(tilde(a), b)``; antisymmetric, and exactly zero for
    equal arguments under as-written floating-point evaluation.
    """
    return a.x * b.y - a.y * b.x


def norm(a: Vec2) -> float:
    """Euclidean length ``sqrt(dot(a, a))``."""
    return math.hypot(a.x, a.y)


def inverse(a: Vec2) -> Vec2:
    """Vector satisfying ``dot(a, inverse(a)) == 1``: ``a / dot(a, a)``."""
    if a.x == 0.0 and a.y == 0.0:
        raise ZeroVectorError("the zero vector has no inverse")
    return a / dot(a, a)


def to_polar(a: Vec2) -> Polar:
    """Split a nonzero vector into a magnitude >= 0 and a direction angle."""
    if a.x == 0.0 and a.y == 0.0:
        raise ZeroVectorError("the zero vector has no direction angle")
    return Polar(norm(a), math.atan2(a.y, a.x))


def from_polar(p: Polar) -> Vec2:
    """Rebuild the Cartesian vector ``magnitude * (cos(angle), sin(angle))``."""
    return Vec2(p.magnitude * math.cos(p.angle), p.magnitude * math.sin(p.angle))


def directed_angle(a: Vec2, b: Vec2) -> float:
    """Signed angle from ``a`` to ``b`` in ``(-pi, pi]``, counterclockwise positive.

    Computed as ``atan2(symp(a, b), dot(a, b))``, so the magnitudes of the
    arguments cancel and only their directions matter.
    """
    if (a.x == 0.0 and a.y == 0.0) or (b.x == 0.0 and b.y == 0.0):
        raise ZeroVectorError("directed angle requires two nonzero vectors")
    return wrap_angle(math.atan2(symp(a, b), dot(a, b)))


def similarity(a: Vec2, c: float, d: float) -> Vec2:
    """Rotate-and-scale ``c*a + d*tilde(a)``.

    Identical to complex multiplication ``(a.x + i*a.y) * (c + i*d)``;
    with ``c = cos(phi)``, ``d = sin(phi)`` it is a pure rotation.
    """
    return Vec2(c * a.x - d * a.y, c * a.y + d * a.x)


def similarity_div(a: Vec2, c: float, d: float) -> Vec2:
    """Inverse similarity ``(c*a - d*tilde(a)) / (c^2 + d^2)``.

    Identical to complex division ``(a.x + i*a.y) / (c + i*d)``.
    """
    s = c * c + d * d
    if s == 0.0:
        raise DegenerateScaleError("similarity scale c + i*d must be nonzero")
    return Vec2((c * a.x + d * a.y) / s, (c * a.y - d * a.x) / s)


def rotate(a: Vec2, phi: float) -> Vec2:
    """Rotate counterclockwise by ``phi``: ``a*cos(phi) + tilde(a)*sin(phi)``."""
    return similarity(a, math.cos(phi), math.sin(phi))


@dataclass(frozen=True, slots=True)
class IdentityResiduals:
    """Left-minus-right evaluation of five classical product identities.

    Every field vanishes identically in exact arithmetic for any argument
    quadruple; the stored values are the raw floating-point leftovers, so
    they double as a stress test of the algebra's internal consistency.
    """

    jacobi: Vec2
    grassmann_full: Vec2
    lagrange: float
    grassmann_reduced: Vec2
    binet_cauchy: float

    def magnitudes(self) -> dict[str, float]:
        """Absolute size of each residual (norms for vectors, abs for scalars)."""
        return {
            "jacobi": norm(self.jacobi),
            "grassmann_full": norm(self.grassmann_full),
            "lagrange": abs(self.lagrange),
            "grassmann_reduced": norm(self.grassmann_reduced),
            "binet_cauchy": abs(self.binet_cauchy),
        }


def identity_residuals(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> IdentityResiduals:
    """Evaluate the five identities as left-minus-right residuals.

    * jacobi:            ``tilde(a)*symp(b,c) + tilde(b)*symp(c,a) + tilde(c)*symp(a,b)``
    * grassmann_full:    ``tilde(a)*symp(b,c) + b*dot(c,a) - c*dot(a,b)``
    * lagrange:          ``symp(a,b)**2 + dot(a,b)**2 - dot(a,a)*dot(b,b)``
    * grassmann_reduced: ``tilde(a)*symp(b,a) + b*dot(a,a) - a*dot(b,a)``
    * binet_cauchy:      ``symp(a,b)*symp(c,d) - (dot(a,c)*dot(b,d) - dot(a,d)*dot(b,c))``

    Only the last identity uses ``d``.
    """
    jacobi = tilde(a) * symp(b, c) + tilde(b) * symp(c, a) + tilde(c) * symp(a, b)
    grassmann_full = tilde(a) * symp(b, c) + b * dot(c, a) - c * dot(a, b)
    lagrange = symp(a, b) ** 2 + dot(a, b) ** 2 - dot(a, a) * dot(b, b)
    grassmann_reduced = tilde(a) * symp(b, a) + b * dot(a, a) - a * dot(b, a)
    binet_cauchy = symp(a, b) * symp(c, d) - (dot(a, c) * dot(b, d) - dot(a, d) * dot(b, c))
    return IdentityResiduals(jacobi, grassmann_full, lagrange, grassmann_reduced, binet_cauchy)
