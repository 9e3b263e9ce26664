"""SVG drawings of mosaics, one square glyph per tile."""

from __future__ import annotations

from knotmosaic.mosaic import Mosaic, mismatched_edges
from knotmosaic.tiles import Edge, Tile

# v1 drawing style; changing any value changes the golden SVG bytes
STYLE = {
    "version": 1,
    "cell": 40,
    "stroke": 3,
    "gap": 12,  # length of the under-strand break at a crossing
    "grid": "#d0d0d0",
    "strand": "#1a1a1a",
    "mismatch": "#d62728",
}

_MID = {Edge.N: (0.5, 0.0), Edge.E: (1.0, 0.5), Edge.S: (0.5, 1.0), Edge.W: (0.0, 0.5)}
_CORNER = {
    frozenset({Edge.N, Edge.E}): (1.0, 0.0),
    frozenset({Edge.N, Edge.W}): (0.0, 0.0),
    frozenset({Edge.S, Edge.E}): (1.0, 1.0),
    frozenset({Edge.S, Edge.W}): (0.0, 1.0),
}


def _fmt(v: float) -> str:
    return f"{v:.2f}".rstrip("0").rstrip(".")


def _arc(x0: float, y0: float, a: Edge, b: Edge, size: float) -> str:
    (ax, ay), (bx, by) = _MID[a], _MID[b]
    r = size / 2
    return (
        f'<path d="M {_fmt(x0 + ax * size)} {_fmt(y0 + ay * size)} '
        f'A {_fmt(r)} {_fmt(r)} 0 0 {1 if _sweep(a, b) else 0} {_fmt(x0 + bx * size)} {_fmt(y0 + by * size)}" class="strand"/>'
    )


def _sweep(a: Edge, b: Edge) -> bool:
    # quarter circle around the shared corner; clockwise when turning a -> b clockwise
    return (b - a) % 4 == 3


def _line(x1, y1, x2, y2, cls="strand") -> str:
    return f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" class="{cls}"/>'


def _glyph(t: Tile, x0: float, y0: float) -> list[str]:
    s = STYLE["cell"]
    out = []
    if t.is_crossing:
        over_vertical = t is Tile.CROSS_V
        g = STYLE["gap"] / 2
        mid = s / 2
        if over_vertical:
            out.append(_line(x0, y0 + mid, x0 + mid - g, y0 + mid))
            out.append(_line(x0 + mid + g, y0 + mid, x0 + s, y0 + mid))
            out.append(_line(x0 + mid, y0, x0 + mid, y0 + s))
        else:
            out.append(_line(x0 + mid, y0, x0 + mid, y0 + mid - g))
            out.append(_line(x0 + mid, y0 + mid + g, x0 + mid, y0 + s))
            out.append(_line(x0, y0 + mid, x0 + s, y0 + mid))
        return out
    for a, b in t.pairs:
        if a.opposite == b:
            (ax, ay), (bx, by) = _MID[a], _MID[b]
            out.append(_line(x0 + ax * s, y0 + ay * s, x0 + bx * s, y0 + by * s))
        else:
            out.append(_arc(x0, y0, a, b, s))
    return out


def render_svg(m: Mosaic) -> str:
    """SVG 1.1 document; dangling connection points get a red marker."""
    s, pad = STYLE["cell"], STYLE["cell"] // 4
    w, h = m.cols * s + 2 * pad, m.rows * s + 2 * pad
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f"<!-- knotmosaic style v{STYLE['version']} -->",
        "<style>"
        f".grid{{fill:none;stroke:{STYLE['grid']};stroke-width:1}}"
        f".strand{{fill:none;stroke:{STYLE['strand']};stroke-width:{STYLE['stroke']};stroke-linecap:butt}}"
        f".mismatch{{fill:{STYLE['mismatch']};stroke:none}}"
        "</style>",
    ]
    for r in range(m.rows):
        for c in range(m.cols):
            x0, y0 = pad + c * s, pad + r * s
            t = m.cells[r][c]
            parts.append(f'<g class="tile t{int(t)}" data-row="{r}" data-col="{c}">')
            parts.append(f'<rect x="{x0}" y="{y0}" width="{s}" height="{s}" class="grid"/>')
            parts.extend(_glyph(t, x0, y0))
            parts.append("</g>")
    for r, c, e in mismatched_edges(m):
        mx, my = _MID[e]
        parts.append(
            f'<circle cx="{_fmt(pad + (c + mx) * s)}" cy="{_fmt(pad + (r + my) * s)}" r="{_fmt(s / 8)}" class="mismatch"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
