"""Constructions layer: anchored figures plus randomized oracle comparisons."""

import math
import random

import pytest
from hypothesis import given, strategies as st

from sympgeo import (
    Circle,
    CoincidentCentersError,
    DegenerateDenominatorError,
    Line,
    ParallelLinesError,
    Vec2,
    ZeroDirectionError,
    circle_tangents,
    collinearity_residual,
    cross_ratio,
    dot,
    intersect_lines,
    is_collinear,
    jacobi_triangle_residual,
    norm,
    point_circle_tangents,
    project_point_onto_line,
    simple_ratio,
    tangent_distance_error,
)

coords = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)
points = st.builds(Vec2, coords, coords)


def shoelace_doubled_area(a, b, c):
    """Independent signed-area oracle with a different grouping of terms."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


# ----------------------------------------------------------- collinearity


def test_collinearity_residual_anchor_values():
    assert collinearity_residual(Vec2(0.0, 1.0), Vec2(1.0, 1.0), Vec2(3.0, 1.0)) == 0.0
    assert collinearity_residual(Vec2(0.0, 0.0), Vec2(1.0, 0.0), Vec2(0.0, 1.0)) == 1.0


def test_collinearity_residual_flips_sign_under_swap():
    a, b, c = Vec2(0.2, -1.0), Vec2(3.0, 0.5), Vec2(-1.0, 4.0)
    assert collinearity_residual(a, c, b) == -collinearity_residual(a, b, c)


@given(points, points, points)
def test_collinearity_residual_matches_shoelace(a, b, c):
    scale = 1.0 + max(norm(a), norm(b), norm(c)) ** 2
    assert abs(collinearity_residual(a, b, c) - shoelace_doubled_area(a, b, c)) <= 1e-9 * scale


def test_is_collinear_anchor_values():
    assert is_collinear(Vec2(0.0, 1.0), Vec2(1.0, 1.0), Vec2(3.0, 1.0))
    assert not is_collinear(Vec2(0.0, 0.0), Vec2(1.0, 0.0), Vec2(0.0, 1.0))
    assert is_collinear(Vec2(0.0, 1.0), Vec2(1.0, 1.0 + 1e-12), Vec2(3.0, 1.0))


def test_is_collinear_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        is_collinear(Vec2(0.0, 0.0), Vec2(1.0, 0.0), Vec2(2.0, 0.0), tol=-1.0)


@given(points, points, st.floats(min_value=-20.0, max_value=20.0, allow_nan=False))
def test_points_on_a_parametrized_line_are_collinear(a, d, t):
    if norm(d) < 1e-3 or norm(a) > 50.0:
        return
    b = a + d
    c = a + d * t
    assert is_collinear(a, b, c, tol=1e-7)


# ------------------------------------------------------------ simple ratio


def test_simple_ratio_anchor():
    a, b, c = Vec2(0.0, 1.0), Vec2(1.0, 1.0), Vec2(3.0, 1.0)
    assert simple_ratio(a, b, c) == 0.5


def test_simple_ratio_is_invariant_under_scaling_the_middle_point():
    a, c = Vec2(0.0, 1.0), Vec2(3.0, 1.0)
    assert simple_ratio(a, Vec2(2.0, 2.0), c) == 0.5


def test_simple_ratio_of_coincident_endpoints_is_zero():
    b, c = Vec2(1.0, 1.0), Vec2(3.0, 1.0)
    assert simple_ratio(b, b, c) == 0.0


def test_simple_ratio_degenerate_denominator():
    with pytest.raises(DegenerateDenominatorError):
        simple_ratio(Vec2(1.0, 0.0), Vec2(2.0, 0.0), Vec2(4.0, 0.0))


# ------------------------------------------------------------- cross ratio


def test_cross_ratio_anchor():
    a, b, c, d = (Vec2(float(i), 1.0) for i in range(4))
    assert cross_ratio(a, b, c, d) == pytest.approx(4.0 / 3.0, rel=1e-15)


def test_cross_ratio_with_c_equal_a_is_zero():
    a, b, d = Vec2(0.0, 1.0), Vec2(1.0, 1.0), Vec2(3.0, 1.0)
    assert cross_ratio(a, b, a, d) == 0.0


def test_cross_ratio_swap_of_last_pair_inverts():
    a, b, c, d = Vec2(0.0, 1.0), Vec2(1.0, 1.0), Vec2(2.0, 1.0), Vec2(5.0, 1.0)
    assert cross_ratio(a, b, d, c) == pytest.approx(1.0 / cross_ratio(a, b, c, d), rel=1e-12)


def test_cross_ratio_degenerate_denominator():
    a = Vec2(1.0, 1.0)
    with pytest.raises(DegenerateDenominatorError):
        cross_ratio(a, a, Vec2(2.0, 2.0), a)


def test_cross_ratio_is_translation_invariant_for_collinear_points():
    # The four points ride one line; the reference origin moves instead.
    rng = random.Random(7)
    for _ in range(100):
        anchor = Vec2(rng.uniform(-5, 5), rng.uniform(-5, 5))
        direction = Vec2(rng.uniform(-2, 2), rng.uniform(-2, 2))
        if norm(direction) < 0.1 or norm(anchor) < 0.1:
            continue
        ts = sorted(rng.uniform(-4, 4) for _ in range(4))
        if min(b - a for a, b in zip(ts, ts[1:])) < 0.05:
            continue
        quad = [anchor + direction * t for t in ts]
        shift = Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10))
        shifted = [p + shift for p in quad]
        base = cross_ratio(*quad)
        moved = cross_ratio(*shifted)
        assert moved == pytest.approx(base, rel=1e-9, abs=1e-12)


# ------------------------------------------------------------ intersection


def test_intersect_lines_anchor():
    l1 = Line(Vec2(0.0, 0.0), Vec2(1.0, 0.0))
    l2 = Line(Vec2(2.0, 2.0), Vec2(0.0, 1.0))
    hit = intersect_lines(l1, l2)
    assert hit.point == Vec2(2.0, 0.0)
    assert hit.lam == 2.0
    assert hit.mu == -2.0


def test_intersect_lines_parallel_raises():
    l1 = Line(Vec2(0.0, 0.0), Vec2(1.0, 1.0))
    l2 = Line(Vec2(1.0, 0.0), Vec2(1.0, 1.0))
    with pytest.raises(ParallelLinesError):
        intersect_lines(l1, l2)


def test_intersect_lines_anchor_point_on_first_line():
    l1 = Line(Vec2(-1.0, 2.0), Vec2(2.0, 0.5))
    l2 = Line(l1.at(1.5), Vec2(0.3, -1.0))
    hit = intersect_lines(l1, l2)
    assert norm(hit.point - l1.at(1.5)) <= 1e-12
    assert abs(hit.mu) <= 1e-12


def test_line_rejects_zero_direction():
    with pytest.raises(ZeroDirectionError):
        Line(Vec2(1.0, 1.0), Vec2(0.0, 0.0))


@given(points, points, points, points)
def test_intersect_lines_closure(p1, d1, p2, d2):
    if norm(d1) < 1e-3 or norm(d2) < 1e-3:
        return
    l1, l2 = Line(p1, d1), Line(p2, d2)
    try:
        hit = intersect_lines(l1, l2)
    except ParallelLinesError:
        return
    scale = 1.0 + abs(hit.lam) * norm(d1) + abs(hit.mu) * norm(d2) + norm(p1) + norm(p2)
    assert norm(hit.point - l2.at(hit.mu)) <= 1e-7 * scale


def test_jacobi_triangle_residual_anchor():
    assert jacobi_triangle_residual(Vec2(1.0, 0.0), Vec2(0.0, 1.0), Vec2(3.0, -4.0)) == Vec2(0.0, 0.0)
    u, v = Vec2(2.0, 1.0), Vec2(-1.0, 3.0)
    assert jacobi_triangle_residual(u, v, Vec2(0.0, 0.0)) == Vec2(0.0, 0.0)


def test_jacobi_triangle_residual_random_sweep():
    rng = random.Random(4242)
    for _ in range(1000):
        u, v, a = (Vec2(rng.uniform(-10, 10), rng.uniform(-10, 10)) for _ in range(3))
        bound = 1e-9 * (1.0 + norm(u) * norm(v) * norm(a))
        assert norm(jacobi_triangle_residual(u, v, a)) <= bound


# -------------------------------------------------------------- projection


def test_project_point_onto_line_anchors():
    x_axis = Line(Vec2(0.0, 0.0), Vec2(1.0, 0.0))
    assert project_point_onto_line(Vec2(2.0, 3.0), x_axis) == Vec2(2.0, 0.0)

    diag = Line(Vec2(0.0, 0.0), Vec2(1.0, 1.0))
    foot = project_point_onto_line(Vec2(1.0, 1.0), diag)
    assert norm(foot - Vec2(1.0, 1.0)) <= 1e-12


@given(points, points, points)
def test_projection_residual_is_perpendicular(p, anchor, d):
    if norm(d) < 1e-3:
        return
    line = Line(anchor, d)
    foot = project_point_onto_line(p, line)
    scale = 1.0 + (norm(p) + norm(anchor) + norm(d)) ** 2
    assert abs(dot(p - foot, d)) <= 1e-7 * scale


# ---------------------------------------------------------------- tangents


SQRT3 = math.sqrt(3.0)


def test_circle_tangents_unit_circles_at_distance_four():
    c1 = Circle(Vec2(0.0, 0.0), 1.0)
    c2 = Circle(Vec2(4.0, 0.0), 1.0)
    tangents = circle_tangents(c1, c2)
    assert [t.kind for t in tangents] == ["outer", "outer", "inner", "inner"]

    low, high = tangents[0], tangents[1]
    assert low.lam == 4.0 and high.lam == -4.0
    assert norm(low.direction_e - Vec2(0.0, -1.0)) <= 1e-12
    assert norm(low.touch1 - Vec2(0.0, -1.0)) <= 1e-12
    assert norm(low.touch2 - Vec2(4.0, -1.0)) <= 1e-12
    assert norm(high.touch1 - Vec2(0.0, 1.0)) <= 1e-12
    assert norm(high.touch2 - Vec2(4.0, 1.0)) <= 1e-12

    inner_plus = tangents[2]
    assert inner_plus.lam == pytest.approx(2.0 * SQRT3, rel=1e-15)
    assert norm(inner_plus.touch1 - Vec2(0.5, -SQRT3 / 2.0)) <= 1e-12

    for t in tangents:
        assert abs(norm(t.direction_e) - 1.0) <= 1e-12
        assert tangent_distance_error(t, c1, c2) <= 1e-9 * 5.0


def test_circle_tangents_overlapping_circles_have_two_outer():
    tangents = circle_tangents(Circle(Vec2(0.0, 0.0), 1.0), Circle(Vec2(1.0, 0.0), 1.0))
    assert len(tangents) == 2
    assert all(t.kind == "outer" for t in tangents)


def test_circle_tangents_containment_has_none():
    tangents = circle_tangents(Circle(Vec2(0.0, 0.0), 3.0), Circle(Vec2(1.0, 0.0), 1.0))
    assert tangents == []


def test_circle_tangents_coincident_centers_raise():
    with pytest.raises(CoincidentCentersError):
        circle_tangents(Circle(Vec2(1.0, 2.0), 1.0), Circle(Vec2(1.0, 2.0), 2.0))


def test_circle_rejects_negative_radius():
    with pytest.raises(ValueError):
        Circle(Vec2(0.0, 0.0), -1.0)


def test_externally_tangent_circles_report_a_doubled_inner_tangent():
    # Radicand exactly zero for the inner family: both lam signs survive.
    tangents = circle_tangents(Circle(Vec2(0.0, 0.0), 1.0), Circle(Vec2(3.0, 0.0), 2.0))
    inner = [t for t in tangents if t.kind == "inner"]
    assert len(inner) == 2
    assert inner[0].lam == 0.0 and inner[1].lam == -0.0
    assert norm(inner[0].touch1 - inner[1].touch1) <= 1e-12


def test_point_circle_tangents_anchor():
    unit = Circle(Vec2(0.0, 0.0), 1.0)
    p = Vec2(2.0, 0.0)
    tangents = point_circle_tangents(p, unit)
    assert len(tangents) == 2
    touches = sorted((t.touch1 for t in tangents), key=lambda v: v.y)
    assert norm(touches[0] - Vec2(0.5, -SQRT3 / 2.0)) <= 1e-12
    assert norm(touches[1] - Vec2(0.5, SQRT3 / 2.0)) <= 1e-12
    for t in tangents:
        assert abs(dot(t.touch1 - p, t.touch1 - unit.center)) <= 1e-12
        assert abs(norm(t.touch1 - unit.center) - 1.0) <= 1e-12
        assert norm(t.touch2 - p) <= 1e-12


def test_point_circle_tangents_inside_and_on_the_circle():
    unit = Circle(Vec2(0.0, 0.0), 1.0)
    assert point_circle_tangents(Vec2(0.3, 0.1), unit) == []
    assert point_circle_tangents(unit.center, unit) == []
    on = point_circle_tangents(Vec2(1.0, 0.0), unit)
    assert len(on) == 2
    assert all(t.lam == 0.0 for t in on)
    assert all(norm(t.touch1 - Vec2(1.0, 0.0)) <= 1e-12 for t in on)


def brute_force_tangent_count(c1, c2, samples=100_000):
    """Sample candidate touch angles on circle 1 and count sign changes of
    the distance defect on circle 2; each simple zero is one tangent."""
    ax, ay = c2.center.x - c1.center.x, c2.center.y - c1.center.y
    signs = []
    for i in range(samples):
        theta = math.tau * i / samples
        f = abs(ax * math.cos(theta) + ay * math.sin(theta) - c1.radius) - c2.radius
        signs.append(f < 0.0)
    return sum(signs[i] != signs[i - 1] for i in range(samples))


def test_tangent_count_trichotomy_against_brute_force():
    import numpy as np

    theta = np.linspace(0.0, math.tau, 100_000, endpoint=False)
    cos_t, sin_t = np.cos(theta), np.sin(theta)

    def count(c1, c2):
        ax, ay = c2.center.x - c1.center.x, c2.center.y - c1.center.y
        below = np.signbit(np.abs(ax * cos_t + ay * sin_t - c1.radius) - c2.radius)
        return int(np.count_nonzero(below != np.roll(below, 1)))

    rng = random.Random(31)
    for trial in range(60):
        r1 = rng.uniform(0.3, 2.0)
        r2 = rng.uniform(0.3, 2.0)
        if trial % 3 == 0:
            d = (r1 + r2) * rng.uniform(1.1, 3.0)
        elif trial % 3 == 1:
            lo, hi = abs(r1 - r2), r1 + r2
            d = lo + (hi - lo) * rng.uniform(0.15, 0.85)
        else:
            r2 = r1 * rng.uniform(0.2, 0.45)
            d = abs(r1 - r2) * rng.uniform(0.1, 0.8)
        angle = rng.uniform(0.0, math.tau)
        c1 = Circle(Vec2(rng.uniform(-3, 3), rng.uniform(-3, 3)), r1)
        c2 = Circle(c1.center + Vec2(d * math.cos(angle), d * math.sin(angle)), r2)
        tangents = circle_tangents(c1, c2)
        assert len(tangents) == count(c1, c2)
        for t in tangents:
            assert tangent_distance_error(t, c1, c2) <= 1e-9 * (1.0 + d)


def test_brute_force_counter_agrees_with_itself_on_anchors():
    assert brute_force_tangent_count(Circle(Vec2(0.0, 0.0), 1.0),
                                     Circle(Vec2(4.0, 0.0), 1.0), samples=10_000) == 4
    assert brute_force_tangent_count(Circle(Vec2(0.0, 0.0), 1.0),
                                     Circle(Vec2(1.0, 0.0), 1.0), samples=10_000) == 2
    assert brute_force_tangent_count(Circle(Vec2(0.0, 0.0), 3.0),
                                     Circle(Vec2(1.0, 0.0), 1.0), samples=10_000) == 0
