"""Minimal SVG 1.1 rendering: segments for edges, dots for vertices."""
from __future__ import annotations

from .graph import PlanarEmbedding
from .solver import Drawing

VIEW = 1000.0
MARGIN = 20.0
DOT_RADIUS = 3.0
STROKE_WIDTH = 1.0


def _fit(drawing: Drawing) -> dict[int, tuple[float, float]]:
    """Map world coordinates into the viewBox, preserving aspect ratio.

    Uniform scale, bounding box centered, y flipped so up stays up.
    """
    pts = drawing.positions
    xs = [p[0] for p in pts.values()]
    ys = [p[1] for p in pts.values()]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    span = max(xmax - xmin, ymax - ymin, 1e-12)
    scale = (VIEW - 2.0 * MARGIN) / span
    xoff = (VIEW - (xmax - xmin) * scale) / 2.0
    yoff = (VIEW - (ymax - ymin) * scale) / 2.0
    return {
        v: (xoff + (x - xmin) * scale, VIEW - yoff - (y - ymin) * scale)
        for v, (x, y) in pts.items()
    }


def render_svg(drawing: Drawing, emb: PlanarEmbedding) -> str:
    mapped = _fit(drawing)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {VIEW:g} {VIEW:g}">'
    ]
    for u, v in emb.edges():
        x1, y1 = mapped[u]
        x2, y2 = mapped[v]
        parts.append(
            f'  <line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"'
            f' stroke="black" stroke-width="{STROKE_WIDTH:g}"/>'
        )
    for v in range(emb.n):
        x, y = mapped[v]
        parts.append(
            f'  <circle cx="{x:.3f}" cy="{y:.3f}" r="{DOT_RADIUS:g}" fill="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
