"""Closed-form constructions: line meets, ratios, and common tangents.

Every construction here returns coordinates directly, with no iterative
solving. The script prints the worked numbers and draws the tangent
configuration to ``tangents.svg`` next to this file.
"""

import math
from pathlib import Path

from sympgeo import (
    Circle,
    Line,
    Vec2,
    circle_tangents,
    cross_ratio,
    intersect_lines,
    is_collinear,
    point_circle_tangents,
    simple_ratio,
    tangent_distance_error,
)
from sympgeo.svgplot import SvgPlot

# Two lines in point-direction form. The meet comes back with the two
# line parameters, so each line can confirm it passes through the point.
line1 = Line(Vec2(0.0, 0.0), Vec2(1.0, 0.0))
line2 = Line(Vec2(2.0, -2.0), Vec2(0.0, 1.0))
hit = intersect_lines(line1, line2)
print("lines meet at", hit.point, "with parameters", hit.lam, hit.mu)
assert hit.point == line1.at(hit.lam)
assert hit.point == line2.at(hit.mu)

# Ratios along a line. Both are built from signed areas of the position
# vectors, so the line must avoid the origin; take y = 1. The midpoint
# splits its segment into equal legs (ratio 1), and four points with
# unit spacing have cross ratio 4/3.
a, c = Vec2(0.0, 1.0), Vec2(4.0, 1.0)
mid = Vec2(2.0, 1.0)
print("simple ratio at the midpoint:", simple_ratio(a, mid, c))
pts = [Vec2(float(k), 1.0) for k in range(4)]
print("cross ratio of 0,1,2,3:      ", cross_ratio(*pts))
assert is_collinear(a, mid, c)

# Common tangents of two circles. With unit circles four apart there are
# two outer and two inner tangents, and the outer pair is horizontal.
c1 = Circle(Vec2(0.0, 0.0), 1.0)
c2 = Circle(Vec2(4.0, 0.0), 1.0)
tangents = circle_tangents(c1, c2)
print("\ntangents of two unit circles, centers 4 apart:")
for t in tangents:
    err = tangent_distance_error(t, c1, c2)
    print(f"  {t.kind:5s} lam={t.lam:+.6f}  touch1={t.touch1}  "
          f"touch2={t.touch2}  distance error {err:.2e}")
assert [t.kind for t in tangents] == ["outer", "outer", "inner", "inner"]
assert tangents[0].lam == 4.0
assert abs(tangents[2].lam - 2.0 * math.sqrt(3.0)) < 1e-12

# From an outside point both tangents exist and touch the circle.
p = Vec2(2.0, 0.0)
for t in point_circle_tangents(p, c1):
    print(f"  from point {p}: touch at {t.touch1}")

plot = SvgPlot("common tangents of two circles")
plot.circle(c1.center.x, c1.center.y, c1.radius, color="#555555")
plot.circle(c2.center.x, c2.center.y, c2.radius, color="#555555")
for t, color in zip(tangents, ("#1f77b4", "#1f77b4", "#d62728", "#d62728")):
    # extend a little past the touch points so the line reads as a line
    d = t.touch2 - t.touch1
    lo = t.touch1 - d * 0.25
    hi = t.touch2 + d * 0.25
    plot.segment(lo.x, lo.y, hi.x, hi.y, color=color)
    plot.marker(t.touch1.x, t.touch1.y)
    plot.marker(t.touch2.x, t.touch2.y)
plot.segment(c1.center.x, c1.center.y, c2.center.x, c2.center.y,
             color="#cccccc", label="center line")

out = Path(__file__).with_name("tangents.svg")
plot.write(str(out))
print("\nwrote", out)
