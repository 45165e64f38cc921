"""Deterministic SVG staircase plots for d = 2."""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import UnsupportedDimension
from .geometry import StaircasePolyhedron

_SIZE = 360
_MARGIN = 40


def _fmt(q: Fraction) -> str:
    return str(q) if q.denominator != 1 else str(q.numerator)


def staircase_svg(P: StaircasePolyhedron, title: str = "") -> str:
    """Axes, the shaded polyhedron, the co-volume region and labelled vertices.

    The same polyhedron always yields the same bytes: coordinates are printed
    with a fixed number of decimals and vertices are taken in canonical order.
    """
    if P.dim != 2:
        raise UnsupportedDimension(f"staircase plots need d = 2, got d = {P.dim}")
    top = max(c for v in P.vertices for c in v)
    span = max(2, math.ceil(top) + 1)
    unit = Fraction(_SIZE - 2 * _MARGIN, span)

    def pt(x: Fraction, y: Fraction) -> str:
        px = _MARGIN + x * unit
        py = _SIZE - _MARGIN - y * unit
        return f"{float(px):.3f},{float(py):.3f}"

    # vertices sorted by x; the boundary runs up the y-axis side to the x-axis side
    verts = sorted(P.vertices)
    lim = Fraction(span)
    boundary = [(verts[0][0], lim)] + verts + [(lim, verts[-1][1])]
    region = boundary + [(lim, lim)]
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" viewBox="0 0 {_SIZE} {_SIZE}">',
        f"<title>{title or 'Newton polyhedron'}</title>",
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
    ]
    if P.is_cofinite():
        hole = [(Fraction(0), Fraction(0)), (Fraction(0), verts[0][1])] + verts + [(verts[-1][0], Fraction(0))]
        lines.append(
            '<polygon class="covolume" points="' + " ".join(pt(*p) for p in hole)
            + '" fill="#f4d6a0" stroke="none"/>'
        )
    lines.append(
        '<polygon class="polyhedron" points="' + " ".join(pt(*p) for p in region)
        + '" fill="#9db8d9" fill-opacity="0.7" stroke="none"/>'
    )
    lines.append(
        '<polyline class="boundary" points="' + " ".join(pt(*p) for p in boundary)
        + '" fill="none" stroke="#1f3b63" stroke-width="2"/>'
    )
    origin = pt(Fraction(0), Fraction(0))
    lines.append(f'<line class="axis" x1="{origin.split(",")[0]}" y1="{origin.split(",")[1]}" '
                 f'x2="{pt(lim, Fraction(0)).split(",")[0]}" y2="{origin.split(",")[1]}" stroke="black"/>')
    lines.append(f'<line class="axis" x1="{origin.split(",")[0]}" y1="{origin.split(",")[1]}" '
                 f'x2="{origin.split(",")[0]}" y2="{pt(Fraction(0), lim).split(",")[1]}" stroke="black"/>')
    for k in range(span + 1):
        x, y = pt(Fraction(k), Fraction(0)).split(",")
        lines.append(f'<text x="{x}" y="{float(y) + 14:.3f}" font-size="10" text-anchor="middle">{k}</text>')
        x, y = pt(Fraction(0), Fraction(k)).split(",")
        if k:
            lines.append(f'<text x="{float(x) - 8:.3f}" y="{float(y) + 3:.3f}" font-size="10" text-anchor="end">{k}</text>')
    for v in verts:
        x, y = pt(*v).split(",")
        lines.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="3.5" fill="#1f3b63"/>')
        lines.append(
            f'<text x="{float(x) + 6:.3f}" y="{float(y) - 6:.3f}" font-size="11">({_fmt(v[0])},{_fmt(v[1])})</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
