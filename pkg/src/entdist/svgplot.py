"""Hand-rolled SVG scatter plots: a quarter-disk polar panel for the 2-D
classification figure and a plain Cartesian panel for the clustering and
nearest-neighbor demos.  Decision boundaries are traced as the zero
contour of D_A - D_B on a grid, which renders straight bisectors and
piecewise nearest-neighbor boundaries alike.
"""

from __future__ import annotations

import json
import math

__all__ = [
    "diverging_color",
    "color_for_label",
    "contour_segments",
    "polar_scatter_svg",
    "cartesian_scatter_svg",
]

_CSS_COLORS = {"red", "blue", "green", "orange", "purple", "brown", "gray", "black"}
_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"]

_POINT_RADIUS = 5.0
_FONT = 'font-family="sans-serif" font-size="11"'


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _lerp(a: float, b: float, t: float) -> float:
    return a + (b - a) * t


def diverging_color(t: float) -> str:
    """Blue (-1) through white (0) to red (+1), clipped outside [-1, 1]."""
    t = min(max(t, -1.0), 1.0)
    blue, white, red = (33, 102, 172), (247, 247, 247), (178, 24, 43)
    lo, hi, s = (blue, white, t + 1.0) if t < 0 else (white, red, t)
    rgb = tuple(int(round(_lerp(a, b, s))) for a, b in zip(lo, hi))
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def color_for_label(label, all_labels) -> str:
    """A label that names a CSS color gets it; others take palette slots."""
    text = str(label)
    if text in _CSS_COLORS:
        return text
    ordered = sorted(str(x) for x in all_labels)
    return _PALETTE[ordered.index(text) % len(_PALETTE)]


def contour_segments(f, xlim, ylim, resolution: int = 160):
    """Zero-contour line segments of f(x, y) via marching squares."""
    x0, x1 = xlim
    y0, y1 = ylim
    xs = [x0 + (x1 - x0) * i / resolution for i in range(resolution + 1)]
    ys = [y0 + (y1 - y0) * j / resolution for j in range(resolution + 1)]
    grid = [[f(x, y) for x in xs] for y in ys]
    segments = []
    for j in range(resolution):
        for i in range(resolution):
            corners = [
                (xs[i], ys[j], grid[j][i]),
                (xs[i + 1], ys[j], grid[j][i + 1]),
                (xs[i + 1], ys[j + 1], grid[j + 1][i + 1]),
                (xs[i], ys[j + 1], grid[j + 1][i]),
            ]
            crossings = []
            for k in range(4):
                xa, ya, fa = corners[k]
                xb, yb, fb = corners[(k + 1) % 4]
                if (fa < 0.0) != (fb < 0.0):
                    t = fa / (fa - fb)
                    crossings.append((_lerp(xa, xb, t), _lerp(ya, yb, t)))
            if len(crossings) == 2:
                segments.append((crossings[0], crossings[1]))
            elif len(crossings) == 4:
                # saddle cell: pair crossings by the sign at the center
                center = sum(c[2] for c in corners) / 4.0
                first = (corners[0][2] < 0.0) == (center < 0.0)
                if first:
                    segments.append((crossings[0], crossings[3]))
                    segments.append((crossings[1], crossings[2]))
                else:
                    segments.append((crossings[0], crossings[1]))
                    segments.append((crossings[2], crossings[3]))
    return segments


class _Panel:
    """Maps a data window to a pixel box (y axis flipped)."""

    def __init__(self, px: float, py: float, size: float, xlim, ylim):
        self.px, self.py, self.size = px, py, size
        self.xlim, self.ylim = xlim, ylim

    def x(self, x: float) -> float:
        x0, x1 = self.xlim
        return self.px + (x - x0) / (x1 - x0) * self.size

    def y(self, y: float) -> float:
        y0, y1 = self.ylim
        return self.py + self.size - (y - y0) / (y1 - y0) * self.size

    def segments(self, segs, color="#888888", width=1.5, dash=None) -> list[str]:
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        return [
            f'<line x1="{_fmt(self.x(ax))}" y1="{_fmt(self.y(ay))}" '
            f'x2="{_fmt(self.x(bx))}" y2="{_fmt(self.y(by))}" '
            f'stroke="{color}" stroke-width="{width}"{dash_attr}/>'
            for (ax, ay), (bx, by) in segs
        ]

    def point(self, x: float, y: float, fill: str, edge: str) -> str:
        return (
            f'<circle cx="{_fmt(self.x(x))}" cy="{_fmt(self.y(y))}" r="{_POINT_RADIUS}" '
            f'fill="{fill}" stroke="{edge}" stroke-width="1.6"/>'
        )

    def cross(self, x: float, y: float, color: str, arm: float = 7.0) -> str:
        cx, cy = self.x(x), self.y(y)
        return (
            f'<path d="M {_fmt(cx - arm)} {_fmt(cy)} H {_fmt(cx + arm)} '
            f'M {_fmt(cx)} {_fmt(cy - arm)} V {_fmt(cy + arm)}" '
            f'stroke="{color}" stroke-width="3" fill="none"/>'
        )

    def text(self, x: float, y: float, s: str, anchor="middle", dy=0.0) -> str:
        return (
            f'<text x="{_fmt(self.x(x))}" y="{_fmt(self.y(y) + dy)}" '
            f'text-anchor="{anchor}" {_FONT}>{s}</text>'
        )


def _document(width: float, height: float, body: list[str], metadata: dict | None) -> str:
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">'
    ]
    if metadata is not None:
        desc = json.dumps(metadata, sort_keys=True).replace("<", "\\u003c")
        parts.append(f"<desc>{desc}</desc>")
    parts.append(f'<rect width="{width:g}" height="{height:g}" fill="white"/>')
    parts.extend(body)
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _polar_grid(panel: _Panel, r_max: float) -> list[str]:
    out = [f'<g stroke="#dddddd" fill="none" stroke-width="1">']
    ox, oy = panel.x(0.0), panel.y(0.0)
    r_step = 0.5 if r_max <= 4 else 1.0
    r = r_step
    while r <= r_max + 1e-9:
        px = r / r_max * panel.size
        out.append(
            f'<path d="M {_fmt(ox + px)} {_fmt(oy)} A {_fmt(px)} {_fmt(px)} 0 0 0 '
            f'{_fmt(ox)} {_fmt(oy - px)}"/>'
        )
        r += r_step
    for deg in (15, 30, 45, 60, 75):
        t = math.radians(deg)
        out.append(
            f'<line x1="{_fmt(ox)}" y1="{_fmt(oy)}" '
            f'x2="{_fmt(panel.x(r_max * math.cos(t)))}" y2="{_fmt(panel.y(r_max * math.sin(t)))}"/>'
        )
    out.append("</g>")
    # radial tick labels along the horizontal axis, angle labels on the arc
    r = r_step
    while r <= r_max + 1e-9:
        out.append(panel.text(r, 0.0, f"{r:g}", dy=14.0))
        r += r_step
    for deg in (0, 30, 60, 90):
        t = math.radians(deg)
        rr = r_max * 1.05
        out.append(panel.text(rr * math.cos(t), rr * math.sin(t), f"{deg}&#176;"))
    return out


def polar_scatter_svg(
    panels,
    r_max: float,
    metadata: dict | None = None,
    panel_size: float = 360.0,
    margin: float = 55.0,
) -> str:
    """One or more quarter-disk panels side by side.

    Each panel is a dict with keys: title, points [(x, y, fill_value, edge_label)],
    fill_scale (value mapped to +/-1 for the diverging fill), references
    [(x, y, label)], labels (all edge labels), boundary (segment list).
    """
    width = margin + len(panels) * (panel_size + margin)
    height = panel_size + 2 * margin
    body = []
    for idx, spec in enumerate(panels):
        panel = _Panel(margin + idx * (panel_size + margin), margin, panel_size, (0.0, r_max), (0.0, r_max))
        body.extend(_polar_grid(panel, r_max))
        body.extend(panel.segments(spec.get("boundary", []), color="#888888", width=1.8))
        scale = spec.get("fill_scale") or 1.0
        labels = spec.get("labels", [])
        for x, y, value, edge_label in spec["points"]:
            fill = diverging_color(value / scale)
            edge = color_for_label(edge_label, labels)
            body.append(panel.point(x, y, fill, edge))
        for x, y, label in spec.get("references", []):
            body.append(panel.cross(x, y, color_for_label(label, labels)))
        title = spec.get("title", "")
        if title:
            tx = panel.px + panel.size / 2.0
            body.append(
                f'<text x="{_fmt(tx)}" y="{_fmt(margin - 18.0)}" text-anchor="middle" '
                f'{_FONT} font-weight="bold">{title}</text>'
            )
    return _document(width, height, body, metadata)


def cartesian_scatter_svg(
    points,
    labels,
    xlim,
    ylim,
    references=(),
    boundary=(),
    names=(),
    title: str = "",
    metadata: dict | None = None,
    panel_size: float = 420.0,
    margin: float = 50.0,
) -> str:
    """Scatter of labeled 2-D points with optional training crosses and boundary."""
    width = height = panel_size + 2 * margin
    panel = _Panel(margin, margin, panel_size, xlim, ylim)
    all_labels = sorted({str(l) for l in labels} | {str(l) for _, _, l in references})
    body = [
        f'<rect x="{margin:g}" y="{margin:g}" width="{panel_size:g}" height="{panel_size:g}" '
        f'fill="none" stroke="#bbbbbb"/>'
    ]
    for lim, horizontal in ((xlim, True), (ylim, False)):
        ticks = _ticks(*lim)
        for t in ticks:
            if horizontal:
                body.append(panel.text(t, ylim[0], f"{t:g}", dy=16.0))
            else:
                body.append(
                    f'<text x="{_fmt(margin - 8.0)}" y="{_fmt(panel.y(t) + 4.0)}" '
                    f'text-anchor="end" {_FONT}>{t:g}</text>'
                )
    body.extend(panel.segments(boundary, color="#888888", width=1.8, dash="6 4"))
    for i, ((x, y), label) in enumerate(zip(points, labels)):
        body.append(panel.point(x, y, color_for_label(label, all_labels), "#333333"))
        if i < len(names):
            body.append(panel.text(x, y, str(names[i]), dy=-10.0))
    for x, y, label in references:
        body.append(panel.cross(x, y, color_for_label(label, all_labels)))
    if title:
        body.append(
            f'<text x="{_fmt(width / 2.0)}" y="{_fmt(margin - 18.0)}" text-anchor="middle" '
            f'{_FONT} font-weight="bold">{title}</text>'
        )
    return _document(width, height, body, metadata)


def _ticks(lo: float, hi: float, n: int = 5) -> list[float]:
    span = hi - lo
    step = 10.0 ** math.floor(math.log10(span / n))
    for mult in (1.0, 2.0, 5.0, 10.0):
        if span / (step * mult) <= n:
            step *= mult
            break
    first = math.ceil(lo / step) * step
    out = []
    t = first
    while t <= hi + 1e-9:
        out.append(round(t, 10))
        t += step
    return out
