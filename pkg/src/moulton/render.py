"""Deterministic SVG figures of M_k.

Lines are drawn as polylines with their kink vertex on the y-axis, regions
are shaded cell by cell on a grid, and ideal points are marked on the frame
in the direction of their slope.  Coordinates are printed with a fixed number
of decimals, so equal input gives byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional
from xml.sax.saxutils import escape

from .desargues import ClosureWitness, DesarguesConfig
from .errors import GeometryError
from .model import (
    Affine,
    Graph,
    Ideal,
    MoultonLine,
    MoultonPlane,
    MoultonPoint,
    Vertical,
    as_k,
)
from .regions import Region

__all__ = ["Viewport", "Figure", "render_svg", "line_polyline"]

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")


@dataclass(frozen=True)
class Viewport:
    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction

    def __post_init__(self):
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise GeometryError("viewport must have x0 < x1 and y0 < y1")

    @classmethod
    def square(cls, r) -> Viewport:
        r = Fraction(r)
        return cls(-r, r, -r, r)


@dataclass
class Figure:
    points: list[tuple[str, MoultonPoint]] = field(default_factory=list)
    lines: list[tuple[str, MoultonLine]] = field(default_factory=list)
    regions: list[tuple[str, Region]] = field(default_factory=list)
    configs: list[tuple[str, DesarguesConfig, Optional[ClosureWitness]]] = field(default_factory=list)

    def empty(self) -> bool:
        return not (self.points or self.lines or self.regions or self.configs)


def line_polyline(k, line: MoultonLine, vp: Viewport) -> list[tuple[Fraction, Fraction]]:
    """Vertices of the visible part of ``line`` before clipping to the y-range.

    A kinked Graph gets a vertex at ``(0, b)`` when the y-axis is in view and
    ``k != 1``; the polyline is otherwise a single segment.
    """
    k = as_k(k)
    if isinstance(line, Vertical):
        return [(line.c, vp.y0), (line.c, vp.y1)] if vp.x0 <= line.c <= vp.x1 else []
    if not isinstance(line, Graph):
        return []
    s, b = line.s, line.b
    left = k * s if s < 0 else s

    def y(x):
        return (left if x < 0 else s) * x + b

    xs = [vp.x0, vp.x1]
    if s < 0 and k != 1 and vp.x0 < 0 < vp.x1:
        xs.insert(1, Fraction(0))
    return [(x, y(x)) for x in xs]


class _Canvas:
    def __init__(self, vp: Viewport, size: int, margin: int):
        self.vp, self.size, self.margin = vp, size, margin
        self.sx = Fraction(size) / (vp.x1 - vp.x0)
        self.sy = Fraction(size) / (vp.y1 - vp.y0)

    def px(self, x, y) -> tuple[str, str]:
        u = self.margin + (x - self.vp.x0) * self.sx
        v = self.margin + (self.vp.y1 - y) * self.sy
        return f"{float(u):.3f}", f"{float(v):.3f}"

    def frame_point(self, slope: Optional[Fraction]) -> tuple[Fraction, Fraction]:
        """Where the ray from the view centre in direction ``(1, slope)`` leaves the frame."""
        vp = self.vp
        cx, cy = (vp.x0 + vp.x1) / 2, (vp.y0 + vp.y1) / 2
        if slope is None:
            return cx, vp.y1
        hx, hy = (vp.x1 - vp.x0) / 2, (vp.y1 - vp.y0) / 2
        t = hx if slope == 0 else min(hx, hy / abs(slope))
        return cx + t, cy + slope * t


def _fmt_label(name: str) -> str:
    return escape(name)


def render_svg(k, figure: Figure, vp: Viewport, size: int = 600, grid: int = 60) -> str:
    if figure.empty():
        raise GeometryError("empty selection")
    k = as_k(k)
    m = 40
    cv = _Canvas(vp, size, m)
    full = size + 2 * m
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{full}" height="{full}" '
        f'viewBox="0 0 {full} {full}">',
        f"<title>M_k with k = {k}</title>",
        '<defs><clipPath id="view">'
        f'<rect x="{m}" y="{m}" width="{size}" height="{size}"/></clipPath></defs>',
        f'<rect x="{m}" y="{m}" width="{size}" height="{size}" fill="white" stroke="black"/>',
    ]
    ideal_marks: list[tuple[str, Optional[Fraction]]] = []

    for i, (name, region) in enumerate(figure.regions):
        out.append(_region_cells(cv, region, grid, PALETTE[i % len(PALETTE)], name))

    # axes
    if vp.x0 < 0 < vp.x1:
        a, b = cv.px(0, vp.y0), cv.px(0, vp.y1)
        out.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" stroke="#bbbbbb" stroke-dasharray="4 3"/>')
    if vp.y0 < 0 < vp.y1:
        a, b = cv.px(vp.x0, 0), cv.px(vp.x1, 0)
        out.append(f'<line x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" stroke="#bbbbbb" stroke-dasharray="4 3"/>')

    lines = list(figure.lines)
    points = list(figure.points)
    for cname, cfg, witness in figure.configs:
        plane = MoultonPlane(k)
        labeled = cfg.labeled()
        pts = dict(labeled)
        if witness is not None:
            for lab, t in zip(("c12", "c13", "c23"), witness.meets):
                pts[lab] = MoultonPoint.from_triple(t)
        for i in range(3):
            o, a, b = cfg.o, cfg.a, cfg.b
            lines.append((f"{cname}:o-a{i + 1}", MoultonLine.from_triple(plane.join(o, a[i]))))
        for tri, tag in ((cfg.a, "a"), (cfg.b, "b")):
            for i, j in ((0, 1), (0, 2), (1, 2)):
                lines.append((f"{cname}:{tag}{i + 1}{tag}{j + 1}", MoultonLine.from_triple(plane.join(tri[i], tri[j]))))
        points.extend(pts.items())

    out.append('<g clip-path="url(#view)" fill="none" stroke-width="1.5">')
    for i, (name, line) in enumerate(lines):
        poly = line_polyline(k, line, vp)
        if poly:
            coords = " ".join(",".join(cv.px(x, y)) for x, y in poly)
            out.append(
                f'<polyline points="{coords}" stroke="{PALETTE[i % len(PALETTE)]}">'
                f"<title>{_fmt_label(name)}</title></polyline>"
            )
        elif not isinstance(line, (Graph, Vertical)):
            ideal_marks.append((name + " (line at infinity)", None))
    out.append("</g>")

    for name, p in points:
        if isinstance(p, Affine):
            if not (vp.x0 <= p.x <= vp.x1 and vp.y0 <= p.y <= vp.y1):
                continue
            u, v = cv.px(p.x, p.y)
            out.append(f'<circle cx="{u}" cy="{v}" r="3" fill="black"/>')
            out.append(f'<text x="{float(u) + 5:.3f}" y="{float(v) - 5:.3f}" font-size="12">{_fmt_label(name)}</text>')
        else:
            ideal_marks.append((name, p.slope if isinstance(p, Ideal) else None))

    for name, slope in ideal_marks:
        x, y = cv.frame_point(slope)
        u, v = cv.px(x, y)
        tag = "vertical" if slope is None else f"slope {slope}"
        out.append(f'<rect x="{float(u) - 4:.3f}" y="{float(v) - 4:.3f}" width="8" height="8" fill="black"/>')
        out.append(
            f'<text x="{float(u) + 6:.3f}" y="{float(v) + 14:.3f}" font-size="11">'
            f"{_fmt_label(name)} [ideal, {tag}]</text>"
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _region_cells(cv: _Canvas, region: Region, n: int, colour: str, name: str) -> str:
    """Shade grid cells whose centre lies in ``region``; runs in a row are merged."""
    vp = cv.vp
    dx, dy = (vp.x1 - vp.x0) / n, (vp.y1 - vp.y0) / n
    rects = []
    for j in range(n):
        yc = vp.y1 - (j + Fraction(1, 2)) * dy
        run = None
        for i in range(n + 1):
            inside = i < n and Affine(vp.x0 + (i + Fraction(1, 2)) * dx, yc) in region
            if inside and run is None:
                run = i
            elif not inside and run is not None:
                u, v = cv.px(vp.x0 + run * dx, vp.y1 - j * dy)
                w = float((i - run) * dx * cv.sx)
                h = float(dy * cv.sy)
                rects.append(f'<rect x="{u}" y="{v}" width="{w:.3f}" height="{h:.3f}"/>')
                run = None
    body = "".join(rects)
    return f'<g fill="{colour}" fill-opacity="0.18" stroke="none"><title>{_fmt_label(name)}</title>{body}</g>'

