"""Standalone SVG figure of a triangle, its edge-bisects and query bisectors."""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from .geom import ParamLine, Vec2
from .triangle import CASES, Triangle, edge_bisect

# Every styling constant used in a render lives here.
STYLE = {
    "width_px": 600.0,
    "margin_frac": 0.10,
    "triangle": {"stroke": "#000000", "stroke-width": "2", "fill": "none"},
    "edge_bisect": {"stroke": "#555555", "stroke-width": "1.5", "stroke-dasharray": "2,4"},
    "query": {"stroke": "#1f4e9e", "stroke-width": "1.5", "stroke-dasharray": "8,5"},
    "axis": {"stroke": "#888888", "stroke-width": "1"},
    "tick_len_px": 5.0,
    "tick_font_px": 11,
    "label_font_px": 12,
    "target_ticks": 8,
}

Box = Tuple[float, float, float, float]


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".") or "0"


def _attrs(style: dict) -> str:
    return " ".join(f'{k}="{v}"' for k, v in style.items())


def nice_step(span: float, target: int) -> float:
    raw = span / max(target, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for f in (1.0, 2.0, 5.0, 10.0):
        if raw <= f * mag:
            return f * mag
    return 10.0 * mag


def fit_viewport(t: Triangle, margin_frac: float) -> Box:
    """Bounds of the triangle and the origin, padded by ``margin_frac``."""
    xs = [p.x for p in t.vertices] + [0.0]
    ys = [p.y for p in t.vertices] + [0.0]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0)
    mx = margin_frac * span
    return x0 - mx, x1 + mx, y0 - mx, y1 + mx


def clip_line_to_box(line: ParamLine, box: Box) -> Optional[Tuple[Vec2, Vec2]]:
    """Segment of an infinite line inside an axis-aligned box (Liang-Barsky)."""
    x0, x1, y0, y1 = box
    lo, hi = -math.inf, math.inf
    for p0, d, a, b in (
        (line.base.x, line.dir.x, x0, x1),
        (line.base.y, line.dir.y, y0, y1),
    ):
        if d == 0.0:
            if not a <= p0 <= b:
                return None
            continue
        s0, s1 = (a - p0) / d, (b - p0) / d
        if s0 > s1:
            s0, s1 = s1, s0
        lo, hi = max(lo, s0), min(hi, s1)
    if lo >= hi:
        return None
    return line.point_at(lo), line.point_at(hi)


def render_svg(t: Triangle, queries: Sequence[Tuple[str, ParamLine]] = ()) -> str:
    """Return the SVG document text.

    ``queries`` pairs a label with each bisector to draw dashed.
    """
    box = fit_viewport(t, STYLE["margin_frac"])
    x0, x1, y0, y1 = box
    width = STYLE["width_px"]
    scale = width / (x1 - x0)
    height = (y1 - y0) * scale

    def sx(x: float) -> float:
        return (x - x0) * scale

    def sy(y: float) -> float:
        return (y1 - y) * scale

    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f"<title>Area bisectors of triangle {escape(t.describe())}</title>",
    ]

    ax_y = ax_x = 0.0
    axis = _attrs(STYLE["axis"])
    out.append('<g id="axes">')
    out.append(f'<line x1="0" y1="{_fmt(sy(ax_y))}" x2="{_fmt(width)}" y2="{_fmt(sy(ax_y))}" {axis}/>')
    out.append(f'<line x1="{_fmt(sx(ax_x))}" y1="0" x2="{_fmt(sx(ax_x))}" y2="{_fmt(height)}" {axis}/>')
    step = nice_step(max(x1 - x0, y1 - y0), STYLE["target_ticks"])
    tick = STYLE["tick_len_px"]
    font = STYLE["tick_font_px"]
    k = math.ceil(x0 / step)
    while k * step <= x1:
        v = k * step
        px = sx(v)
        out.append(f'<line x1="{_fmt(px)}" y1="{_fmt(sy(ax_y) - tick)}" x2="{_fmt(px)}" y2="{_fmt(sy(ax_y) + tick)}" {axis}/>')
        out.append(f'<text x="{_fmt(px)}" y="{_fmt(sy(ax_y) + tick + font)}" font-size="{font}" text-anchor="middle">{_fmt(v)}</text>')
        k += 1
    k = math.ceil(y0 / step)
    while k * step <= y1:
        v = k * step
        py = sy(v)
        out.append(f'<line x1="{_fmt(sx(ax_x) - tick)}" y1="{_fmt(py)}" x2="{_fmt(sx(ax_x) + tick)}" y2="{_fmt(py)}" {axis}/>')
        out.append(f'<text x="{_fmt(sx(ax_x) - tick - 2)}" y="{_fmt(py + font / 3)}" font-size="{font}" text-anchor="end">{_fmt(v)}</text>')
        k += 1
    out.append("</g>")

    pts = " ".join(f"{_fmt(sx(p.x))},{_fmt(sy(p.y))}" for p in t.vertices)
    out.append(f'<polygon id="triangle" points="{pts}" {_attrs(STYLE["triangle"])}/>')
    label_font = STYLE["label_font_px"]
    for name, p in zip("ABC", t.vertices):
        out.append(f'<text x="{_fmt(sx(p.x) + 4)}" y="{_fmt(sy(p.y) - 4)}" font-size="{label_font}">{name}</text>')

    def segment(line: ParamLine, style: dict, ident: str, label: str) -> None:
        seg = clip_line_to_box(line, box)
        if seg is None:
            return
        p, q = seg
        out.append(
            f'<line id="{ident}" x1="{_fmt(sx(p.x))}" y1="{_fmt(sy(p.y))}" '
            f'x2="{_fmt(sx(q.x))}" y2="{_fmt(sy(q.y))}" {_attrs(style)}>'
            f"<title>{escape(label)}</title></line>"
        )

    out.append('<g id="edge-bisects">')
    for case in CASES:
        segment(edge_bisect(t, case), STYLE["edge_bisect"], f"edge-bisect-{case}", f"{case.value.lower()}-bisect")
    out.append("</g>")
    out.append('<g id="bisectors">')
    for i, (label, line) in enumerate(queries):
        segment(line, STYLE["query"], f"bisector-{i}", label)
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
