"""Closed-form planar constructions built from signed areas.

Each solver here is a small loop-closure argument: write the figure as a
vector loop, multiply by a well-chosen perpendicular to eliminate one
unknown, and read the answer off as a ratio of perp-dot products.  No
iteration, no linear-system solver; degenerate figures raise typed errors
instead of returning garbage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import ATOL, Vec2, dot, norm, symp, tilde
from .errors import (
    CoincidentCentersError,
    DegenerateDenominatorError,
    ParallelLinesError,
    ZeroDirectionError,
)


@dataclass(frozen=True, slots=True)
class Line:
    """Infinite line through ``point`` along the nonzero ``direction``."""

    point: Vec2
    direction: Vec2

    def __post_init__(self) -> None:
        if self.direction.x == 0.0 and self.direction.y == 0.0:
            raise ZeroDirectionError("line direction must be nonzero")

    def at(self, t: float) -> Vec2:
        """Point ``point + t*direction``."""
        return self.point + self.direction * t


@dataclass(frozen=True, slots=True)
class Circle:
    """Circle with a nonnegative radius; radius 0 is a point."""

    center: Vec2
    radius: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.radius) and self.radius >= 0.0):
            raise ValueError(f"circle radius must be finite and >= 0, got {self.radius}")


@dataclass(frozen=True, slots=True)
class Intersection:
    """Meeting point of two lines plus the parameter along each direction.

    ``point == line1.point + lam*line1.direction``
    ``point == line2.point + mu*line2.direction``
    """

    point: Vec2
    lam: float
    mu: float


@dataclass(frozen=True, slots=True)
class Tangent:
    """One common tangent of two circles.

    ``direction_e`` is the unit vector from the first center toward its
    touch point; the tangent line itself runs along ``tilde(direction_e)``
    through ``touch1``.  ``lam`` is the signed distance from ``touch1`` to
    ``touch2`` along that line, and ``kind`` is ``"outer"`` or ``"inner"``.
    """

    touch1: Vec2
    touch2: Vec2
    direction_e: Vec2
    kind: str
    lam: float


def collinearity_residual(a: Vec2, b: Vec2, c: Vec2) -> float:
    """``symp(a,b) + symp(b,c) + symp(c,a)``: twice the signed area of ABC.

    Zero exactly when the three points are collinear.
    """
    return symp(a, b) + symp(b, c) + symp(c, a)


def is_collinear(a: Vec2, b: Vec2, c: Vec2, tol: float = 1e-9) -> bool:
    """Thresholded collinearity test, invariant under uniform scaling of the figure."""
    if not (math.isfinite(tol) and tol >= 0.0):
        raise ValueError("tolerance must be finite and >= 0")
    scale = max(1.0, norm(a) * norm(b), norm(b) * norm(c), norm(c) * norm(a))
    return abs(collinearity_residual(a, b, c)) <= tol * scale


def simple_ratio(a: Vec2, b: Vec2, c: Vec2) -> float:
    """Signed ratio ``AB/BC`` of collinear points as ``symp(a,b)/symp(b,c)``.

    The middle argument only contributes its direction: scaling ``b`` by
    any nonzero factor leaves the ratio unchanged.
    """
    denominator = symp(b, c)
    if abs(denominator) <= ATOL:
        raise DegenerateDenominatorError("symp(b, c) vanishes; simple ratio undefined")
    return symp(a, b) / denominator


def cross_ratio(a: Vec2, b: Vec2, c: Vec2, d: Vec2) -> float:
    """Projective cross ratio ``(symp(a,c)*symp(b,d)) / (symp(b,c)*symp(a,d))``."""
    bc = symp(b, c)
    ad = symp(a, d)
    if abs(bc) <= ATOL or abs(ad) <= ATOL:
        raise DegenerateDenominatorError("cross-ratio denominator vanishes")
    return (symp(a, c) * symp(b, d)) / (bc * ad)


def intersect_lines(line1: Line, line2: Line) -> Intersection:
    """Intersect two non-parallel lines in closed form.

    Closes the triangle ``a + mu*v - lam*u = 0`` (``a`` joining the two
    anchor points) by multiplying with the perpendiculars of ``v`` and
    ``u``, each of which kills one unknown.
    """
    u = line1.direction
    v = line2.direction
    denominator = symp(u, v)
    if abs(denominator) <= ATOL * norm(u) * norm(v):
        raise ParallelLinesError("lines are parallel; no finite intersection")
    a = line2.point - line1.point
    lam = -symp(v, a) / denominator
    mu = symp(a, u) / denominator
    return Intersection(line1.point + u * lam, lam, mu)


def jacobi_triangle_residual(u: Vec2, v: Vec2, a: Vec2) -> Vec2:
    """``a*symp(u,v) + u*symp(v,a) + v*symp(a,u)``, identically zero.

    This is the intersection loop multiplied out by its common area
    denominator; numerically it measures how well the closed form closes.
    """
    return a * symp(u, v) + u * symp(v, a) + v * symp(a, u)


def project_point_onto_line(p: Vec2, line: Line) -> Vec2:
    """Foot of the perpendicular from ``p`` onto ``line``."""
    return intersect_lines(line, Line(p, tilde(line.direction))).point


def circle_tangents(c1: Circle, c2: Circle) -> list[Tangent]:
    """All common tangent lines of two circles with distinct centers.

    With ``a`` the center offset, each tangent closes the loop
    ``(R1 -+ R2)*e + lam*tilde(e) = a`` with a unit vector ``e``; squaring
    gives ``lam = +-sqrt(dot(a,a) - (R1 -+ R2)^2)`` and ``e`` follows in
    closed form.  The minus sign (difference of radii) produces the outer
    pair, the plus sign (sum) the inner pair, so disjoint circles have
    four tangents, overlapping circles two, and containment none.

    Results are ordered outer(+lam), outer(-lam), inner(+lam), inner(-lam).
    A tangency (radicand exactly zero) keeps both lam signs as two
    coincident entries rather than deduplicating.
    """
    a = c2.center - c1.center
    if norm(a) <= ATOL:
        raise CoincidentCentersError("circle centers coincide; tangent directions undefined")
    a2 = dot(a, a)
    ta = tilde(a)
    tangents: list[Tangent] = []
    for kind, reach, sigma in (
        ("outer", c1.radius - c2.radius, -1.0),
        ("inner", c1.radius + c2.radius, 1.0),
    ):
        radicand = a2 - reach * reach
        if radicand < 0.0:
            continue
        root = math.sqrt(radicand)
        for lam in (root, -root):
            e = (a * reach - ta * lam) / a2
            touch1 = c1.center + e * c1.radius
            touch2 = c2.center - e * (sigma * c2.radius)
            tangents.append(Tangent(touch1, touch2, e, kind, lam))
    return tangents


def point_circle_tangents(p: Vec2, c: Circle) -> list[Tangent]:
    """Tangents from a point to a circle: the zero-radius special case.

    The outer and inner families coincide pairwise when one radius is
    zero, so this returns the two distinct tangents for a point outside
    the circle, the degenerate tangent twice for a point on it, and an
    empty list for a point inside (including the center itself).
    """
    if norm(p - c.center) <= ATOL:
        return []
    return [t for t in circle_tangents(c, Circle(p, 0.0)) if t.kind == "outer"]


def tangent_distance_error(t: Tangent, c1: Circle, c2: Circle) -> float:
    """Worst deviation of the tangent line's center distances from the radii."""
    d1 = abs(dot(c1.center - t.touch1, t.direction_e))
    d2 = abs(dot(c2.center - t.touch1, t.direction_e))
    return max(abs(d1 - c1.radius), abs(d2 - c2.radius))
