"""Dependency-free SVG charts.

Collects polylines, circles, segments, and markers in data coordinates,
then scales everything uniformly into a fixed 800x600 view box on save.
Good enough for construction diagrams, sweep curves, and phase portraits;
plots are a convenience here, never load-bearing.
"""

from __future__ import annotations

import math

WIDTH = 800
HEIGHT = 600
MARGIN = 54.0

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
)


class SvgPlot:
    """Accumulate shapes in data space; emit a scaled SVG document."""

    def __init__(self, title: str = "") -> None:
        self.title = title
        self._shapes: list[tuple] = []
        self._legend: list[tuple[str, str]] = []
        self._series = 0
        self._min_x = math.inf
        self._min_y = math.inf
        self._max_x = -math.inf
        self._max_y = -math.inf

    def _grow(self, x: float, y: float) -> None:
        self._min_x = min(self._min_x, x)
        self._min_y = min(self._min_y, y)
        self._max_x = max(self._max_x, x)
        self._max_y = max(self._max_y, y)

    def _next_color(self) -> str:
        color = PALETTE[self._series % len(PALETTE)]
        self._series += 1
        return color

    def polyline(self, points: list[tuple[float, float]], color: str | None = None,
                 width: float = 1.6, label: str | None = None) -> None:
        if not points:
            return
        if color is None:
            color = self._next_color()
        for x, y in points:
            self._grow(x, y)
        self._shapes.append(("polyline", list(points), color, width))
        if label:
            self._legend.append((label, color))

    def circle(self, cx: float, cy: float, r: float, color: str = "#333333",
               width: float = 1.6, label: str | None = None) -> None:
        self._grow(cx - r, cy - r)
        self._grow(cx + r, cy + r)
        self._shapes.append(("circle", cx, cy, r, color, width))
        if label:
            self._legend.append((label, color))

    def segment(self, x1: float, y1: float, x2: float, y2: float,
                color: str = "#333333", width: float = 1.6,
                label: str | None = None) -> None:
        self._grow(x1, y1)
        self._grow(x2, y2)
        self._shapes.append(("segment", x1, y1, x2, y2, color, width))
        if label:
            self._legend.append((label, color))

    def marker(self, x: float, y: float, color: str = "#000000",
               label: str | None = None) -> None:
        """Small dot of fixed screen size at a data point."""
        self._grow(x, y)
        self._shapes.append(("marker", x, y, color))
        if label:
            self._legend.append((label, color))

    def _transform(self) -> tuple[float, float, float]:
        """Uniform scale plus offsets mapping data space into the view box."""
        span_x = self._max_x - self._min_x
        span_y = self._max_y - self._min_y
        if not (math.isfinite(span_x) and math.isfinite(span_y)):
            return 1.0, MARGIN, HEIGHT - MARGIN
        scale_x = (WIDTH - 2.0 * MARGIN) / span_x if span_x > 0.0 else math.inf
        scale_y = (HEIGHT - 2.0 * MARGIN) / span_y if span_y > 0.0 else math.inf
        scale = min(scale_x, scale_y)
        if not math.isfinite(scale):
            scale = 1.0
        offset_x = MARGIN + ((WIDTH - 2.0 * MARGIN) - span_x * scale) / 2.0
        offset_y = MARGIN + ((HEIGHT - 2.0 * MARGIN) - span_y * scale) / 2.0
        return scale, offset_x, offset_y

    def to_svg(self) -> str:
        scale, offset_x, offset_y = self._transform()

        def sx(x: float) -> float:
            return offset_x + (x - self._min_x) * scale

        def sy(y: float) -> float:
            # SVG y grows downward; data y grows upward.
            return HEIGHT - (offset_y + (y - self._min_y) * scale)

        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}">',
            f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        ]
        if math.isfinite(self._min_x):
            if self._min_x <= 0.0 <= self._max_x:
                x0 = sx(0.0)
                parts.append(
                    f'<line x1="{x0:.2f}" y1="{MARGIN:.2f}" x2="{x0:.2f}" '
                    f'y2="{HEIGHT - MARGIN:.2f}" stroke="#cccccc" stroke-width="1"/>'
                )
            if self._min_y <= 0.0 <= self._max_y:
                y0 = sy(0.0)
                parts.append(
                    f'<line x1="{MARGIN:.2f}" y1="{y0:.2f}" x2="{WIDTH - MARGIN:.2f}" '
                    f'y2="{y0:.2f}" stroke="#cccccc" stroke-width="1"/>'
                )
        for shape in self._shapes:
            kind = shape[0]
            if kind == "polyline":
                _, points, color, width = shape
                coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in points)
                parts.append(
                    f'<polyline points="{coords}" fill="none" stroke="{color}" '
                    f'stroke-width="{width}"/>'
                )
            elif kind == "circle":
                _, cx, cy, r, color, width = shape
                parts.append(
                    f'<circle cx="{sx(cx):.2f}" cy="{sy(cy):.2f}" r="{r * scale:.2f}" '
                    f'fill="none" stroke="{color}" stroke-width="{width}"/>'
                )
            elif kind == "segment":
                _, x1, y1, x2, y2, color, width = shape
                parts.append(
                    f'<line x1="{sx(x1):.2f}" y1="{sy(y1):.2f}" x2="{sx(x2):.2f}" '
                    f'y2="{sy(y2):.2f}" stroke="{color}" stroke-width="{width}"/>'
                )
            elif kind == "marker":
                _, x, y, color = shape
                parts.append(
                    f'<circle cx="{sx(x):.2f}" cy="{sy(y):.2f}" r="3.5" fill="{color}"/>'
                )
        if self.title:
            parts.append(
                f'<text x="{WIDTH / 2:.0f}" y="26" text-anchor="middle" '
                f'font-family="sans-serif" font-size="16" fill="#222222">{self.title}</text>'
            )
        for i, (label, color) in enumerate(self._legend):
            y = 46 + 18 * i
            parts.append(
                f'<rect x="12" y="{y - 9}" width="14" height="4" fill="{color}"/>'
            )
            parts.append(
                f'<text x="32" y="{y}" font-family="sans-serif" font-size="12" '
                f'fill="#222222">{label}</text>'
            )
        parts.append("</svg>")
        return "\n".join(parts) + "\n"

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(self.to_svg())
