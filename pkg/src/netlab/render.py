"""SVG pictures of nets: both sheets side by side, or one edge's development.

Output is plain text built from fixed-precision numbers in a fixed order, so
equal inputs give byte-identical files.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .net import Net
from .surface import BOTTOM, TOP, Surface
from .tracer import develop, holonomy

PAD = 0.15
COLORS = ("#c0392b", "#2471a3", "#229954", "#8e44ad", "#d68910", "#17a589")


def _f(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _pi_label(q: Fraction | None, value: float) -> str:
    if q is None:
        return f"{value:.4f}"
    if q == 0:
        return "0"
    num = "" if q.numerator == 1 else str(q.numerator)
    return f"{num}π" if q.denominator == 1 else f"{num}π/{q.denominator}"


class _Canvas:
    def __init__(self, lo, hi, width=420.0):
        span = np.maximum(hi - lo, 1e-12)
        self.k = width / float(max(span))
        self.lo, self.hi = lo, hi
        self.w = float(span[0]) * self.k
        self.h = float(span[1]) * self.k
        self.items: list[str] = []

    def xy(self, p):
        # flip y so the picture has the usual orientation
        return (float(p[0] - self.lo[0]) * self.k, float(self.hi[1] - p[1]) * self.k)

    def poly(self, pts, cls, fill="none"):
        s = " ".join(f"{_f(x)},{_f(y)}" for x, y in map(self.xy, pts))
        self.items.append(f'<polygon class="{cls}" points="{s}" fill="{fill}" '
                          f'stroke="#444" stroke-width="1"/>')

    def line(self, p, q, color, width=2.0, dash=None):
        (x1, y1), (x2, y2) = self.xy(p), self.xy(q)
        d = f' stroke-dasharray="{dash}"' if dash else ""
        self.items.append(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" '
                          f'stroke="{color}" stroke-width="{width}"{d}/>')

    def dot(self, p, r, color):
        x, y = self.xy(p)
        self.items.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{r}" fill="{color}"/>')

    def text(self, p, s, size=11, dx=4.0, dy=-4.0):
        x, y = self.xy(p)
        self.items.append(f'<text x="{_f(x + dx)}" y="{_f(y + dy)}" font-size="{size}" '
                          f'font-family="sans-serif">{s}</text>')

    def svg(self) -> str:
        head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(self.w)}" '
                f'height="{_f(self.h)}" viewBox="0 0 {_f(self.w)} {_f(self.h)}">')
        return "\n".join([head, *self.items, "</svg>"]) + "\n"


def _sheet_offset(surface: Surface) -> np.ndarray:
    width = float(np.ptp(surface.vertices[:, 0]))
    return np.array([width * (1 + PAD), 0.0])


def render_sheets(net: Net | None = None, surface: Surface | None = None) -> str:
    """Top (left) and Bottom (right) in polygon coordinates with the net drawn on them."""
    s = net.surface if net is not None else surface
    if s is None:
        raise ValueError("need a net or a surface")
    shift = {TOP: np.zeros(2), BOTTOM: _sheet_offset(s)}
    pts = np.vstack([s.vertices, s.vertices + shift[BOTTOM]])
    margin = PAD * s.scale
    cv = _Canvas(pts.min(axis=0) - margin, pts.max(axis=0) + margin)
    for sheet in (TOP, BOTTOM):
        cv.poly(s.vertices + shift[sheet], sheet, "#f7f7f7")
        cv.text(s.vertices.min(axis=0) + shift[sheet] - np.array([0, 0.6 * margin]), sheet,
                size=13, dx=0, dy=0)
    labels = s.curvature_over_pi or [None] * s.n
    for c, q in zip(s.cones, labels):
        for sheet in (TOP, BOTTOM):
            cv.dot(np.asarray(c.position) + shift[sheet], 3, "#000")
        cv.text(np.asarray(c.position), _pi_label(q, c.curvature), size=10)
    if net is not None:
        for i, e in enumerate(net.edges):
            color = COLORS[i % len(COLORS)]
            for sg in e.path.segments:
                off = shift[sg.sheet]
                cv.line(np.asarray(sg.p0) + off, np.asarray(sg.p1) + off, color)
        for v in net.vertices:
            sheets = (TOP, BOTTOM) if v.on_edge else (v.sheet,)
            for sheet in sheets:
                cv.dot(v.xy + shift[sheet], 4, "#111")
    return cv.svg()


def render_development(net: Net, edge: int = 0) -> str:
    """The corridor of polygon copies unfolded along one edge, with its straight image."""
    if not 0 <= edge < net.E:
        raise IndexError(f"net has no edge {edge}")
    s = net.surface
    e = net.edges[edge]
    isos = holonomy(s, e.path.word)
    copies = [(m[:2, :2] @ s.vertices.T).T + m[:2, 2] for m in isos]
    dev = develop(s, e.path, tol=np.inf)
    pts = np.vstack(copies + [np.asarray(dev.start), np.asarray(dev.end)])
    margin = PAD * s.scale
    cv = _Canvas(pts.min(axis=0) - margin, pts.max(axis=0) + margin)
    for k, c in enumerate(copies):
        cv.poly(c, f"copy-{k}", "#f7f7f7" if k % 2 == 0 else "#e8eef5")
    for k, a in enumerate(e.path.word):
        i, j = s.edges[a]
        cv.line(copies[k][i], copies[k][j], "#888", 1.5, dash="4,3")
    cv.line(dev.start, dev.end, COLORS[edge % len(COLORS)], 2.5)
    cv.dot(dev.start, 4, "#111")
    cv.dot(dev.end, 4, "#111")
    cv.text(dev.start, f"word {list(e.path.word)}", size=11)
    return cv.svg()
