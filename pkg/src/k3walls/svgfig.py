"""Deterministic SVG rendering of wall diagrams in the upper half plane.

The picture is a fixed 800x480 canvas.  Semicircular walls become
elliptical arcs because the x and y axes carry independent scales; the
arc is emitted as "M x1 y A rx ry 0 0 1 x2 y" which bulges upward in
screen coordinates (the y axis points down, so sweep flag 1 walks the
ellipse counterclockwise in user space).  Everything is clipped to the
plot rectangle.  No timestamps, ids or randomness: equal inputs give
byte-identical files.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .report import frac_of_json, frac_str

WIDTH = 800
HEIGHT = 480
MARGIN_LEFT = 60
MARGIN_RIGHT = 180
MARGIN_TOP = 34
MARGIN_BOTTOM = 44

PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
    "#aec7e8",
    "#ffbb78",
)


def _curve_extent(curve: dict) -> tuple[float, float, float]:
    """(x lo, x hi, top y) of one wall curve in plane coordinates."""
    if curve["kind"] == "vertical_line":
        x0 = float(frac_of_json(curve["x0"]))
        return x0, x0, 0.0
    center = float(frac_of_json(curve["center"]))
    radius = math.sqrt(float(frac_of_json(curve["radius_sq"])))
    return center - radius, center + radius, radius


def _above_marker(wall: dict, marker_sq: Fraction) -> bool:
    """Does the wall reach above the marker line?  Vertical lines always
    do; semicircles need radius^2 > marker^2 (exact comparison)."""
    curve = wall["curve"]
    if curve is None:
        return False
    if curve["kind"] == "vertical_line":
        return True
    return frac_of_json(curve["radius_sq"]) > marker_sq


def default_ranges(walls: list, y_marker: float) -> tuple[tuple[float, float], tuple[float, float]]:
    xs: list[float] = [0.0]
    top = max(1.0, y_marker)
    for wall in walls:
        lo, hi, peak = _curve_extent(wall["curve"])
        xs.extend((lo, hi))
        top = max(top, peak)
    if len(xs) == 1:
        xs = [-2.0, 2.0]
    pad = max(0.5, 0.05 * (max(xs) - min(xs)))
    return (min(xs) - pad, max(xs) + pad), (0.0, top + 0.5)


class _Canvas:
    def __init__(self, x_range: tuple[float, float], y_range: tuple[float, float], precision: int):
        self.x0, self.x1 = x_range
        self.y0, self.y1 = y_range
        if not (self.x1 > self.x0 and self.y1 > self.y0):
            raise ValueError("figure ranges must be increasing intervals")
        self.precision = precision
        self.plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
        self.plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
        self.sx = self.plot_w / (self.x1 - self.x0)
        self.sy = self.plot_h / (self.y1 - self.y0)

    def fmt(self, value: float) -> str:
        return f"{value + 0.0:.{self.precision}f}"

    def px(self, x: float) -> str:
        return self.fmt(MARGIN_LEFT + (x - self.x0) * self.sx)

    def py(self, y: float) -> str:
        return self.fmt(MARGIN_TOP + (self.y1 - y) * self.sy)


def _legend_label(wall: dict) -> str:
    if wall["gamma"] is not None:
        return f"gamma = {frac_str(wall['gamma'])}"
    if wall["curve"] is not None and wall["curve"]["kind"] == "semicircle":
        return f"r^2 = {frac_str(wall['curve']['radius_sq'])}"
    return "wall"


def render_figure(
    payload: dict,
    x_range: Optional[tuple[float, float]] = None,
    y_range: Optional[tuple[float, float]] = None,
    y_marker: Fraction = Fraction(1),
    precision: int = 6,
) -> str:
    marker = float(y_marker)
    walls = [wall for wall in payload["walls"] if _above_marker(wall, y_marker * y_marker)]
    auto_x, auto_y = default_ranges(walls, marker)
    cv = _Canvas(x_range or auto_x, y_range or auto_y, precision)

    title = f"Walls for v = ({', '.join(str(c) for c in payload['vector'])}), d = {payload['surface']['d']}"
    left, right = cv.px(cv.x0), cv.px(cv.x1)
    top, bottom = cv.py(cv.y1), cv.py(cv.y0)

    out: list[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">'
    )
    out.append('<rect width="100%" height="100%" fill="#ffffff"/>')
    out.append(
        f'<clipPath id="plot"><rect x="{left}" y="{top}" width="{cv.fmt(cv.plot_w)}" '
        f'height="{cv.fmt(cv.plot_h)}"/></clipPath>'
    )
    out.append(
        f'<text x="{cv.fmt(MARGIN_LEFT)}" y="{cv.fmt(MARGIN_TOP - 12)}" font-family="monospace" '
        f'font-size="14" fill="#000000">{title}</text>'
    )
    out.append(
        f'<rect x="{left}" y="{top}" width="{cv.fmt(cv.plot_w)}" height="{cv.fmt(cv.plot_h)}" '
        f'fill="none" stroke="#000000" stroke-width="1"/>'
    )

    # integer ticks along the x axis
    for tick in range(math.ceil(cv.x0), math.floor(cv.x1) + 1):
        tx = cv.px(tick)
        out.append(
            f'<line x1="{tx}" y1="{bottom}" x2="{tx}" y2="{cv.fmt(float(bottom) + 5)}" '
            f'stroke="#000000" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{tx}" y="{cv.fmt(float(bottom) + 18)}" font-family="monospace" font-size="11" '
            f'text-anchor="middle" fill="#000000">{tick}</text>'
        )
    out.append(
        f'<text x="{right}" y="{cv.fmt(float(bottom) + 34)}" font-family="monospace" font-size="12" '
        f'text-anchor="end" fill="#000000">x</text>'
    )

    # dashed horizontal marker, usually the y = 1 geometricity line
    if cv.y0 < marker < cv.y1:
        my = cv.py(marker)
        out.append(
            f'<line x1="{left}" y1="{my}" x2="{right}" y2="{my}" stroke="#888888" '
            f'stroke-width="1" stroke-dasharray="6,4"/>'
        )
        out.append(
            f'<text x="{cv.fmt(float(right) + 6)}" y="{my}" font-family="monospace" font-size="11" '
            f'dominant-baseline="middle" fill="#555555">y = {frac_str(y_marker)}</text>'
        )

    drawn: list[tuple[str, str]] = []
    for wall in walls:
        curve = wall["curve"]
        lo, hi, _ = _curve_extent(curve)
        if hi < cv.x0 or lo > cv.x1:
            continue
        color = PALETTE[len(drawn) % len(PALETTE)]
        if curve["kind"] == "vertical_line":
            wx = cv.px(lo)
            out.append(
                f'<line x1="{wx}" y1="{bottom}" x2="{wx}" y2="{top}" stroke="{color}" '
                f'stroke-width="1.5" stroke-dasharray="2,3" clip-path="url(#plot)"/>'
            )
        else:
            radius = (hi - lo) / 2.0
            x1 = cv.px(lo)
            x2 = cv.px(hi)
            rx = cv.fmt(radius * cv.sx)
            ry = cv.fmt(radius * cv.sy)
            out.append(
                f'<path d="M {x1} {bottom} A {rx} {ry} 0 0 1 {x2} {bottom}" fill="none" '
                f'stroke="{color}" stroke-width="1.5" clip-path="url(#plot)"/>'
            )
        drawn.append((_legend_label(wall), color))

    # legend in the right margin, one swatch per drawn wall
    lx = WIDTH - MARGIN_RIGHT + 14
    for i, (label, color) in enumerate(drawn):
        ly = MARGIN_TOP + 10 + 18 * i
        out.append(
            f'<line x1="{cv.fmt(lx)}" y1="{cv.fmt(ly)}" x2="{cv.fmt(lx + 22)}" y2="{cv.fmt(ly)}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{cv.fmt(lx + 28)}" y="{cv.fmt(ly + 4)}" font-family="monospace" '
            f'font-size="11" fill="#000000">{label}</text>'
        )

    out.append("</svg>")
    return "\n".join(out) + "\n"
