"""SVG drawings of three-variable complexes on the plane triangle of degree-d monomials."""

from __future__ import annotations

import math
from fractions import Fraction

from .cellcomplex import LabelledComplex

# corners of the plane triangle for x_1, x_2, x_3 (x_1 bottom left, x_3 on top)
_CORNERS = ((40.0, 360.0), (440.0, 360.0), (240.0, 13.6))
_FILL = {2: "#d9d9d9", "top": "#9e9e9e"}


def project(exponents) -> tuple[float, float]:
    d = sum(exponents)
    if d == 0:
        return _CORNERS[0]
    x = sum(Fraction(e, d) * c[0] for e, c in zip(exponents, _CORNERS))
    y = sum(Fraction(e, d) * c[1] for e, c in zip(exponents, _CORNERS))
    return float(x), float(y)


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_svg(X: LabelledComplex) -> str:
    if X.n != 3:
        raise ValueError("rendering is only defined for complexes in three variables")
    top_degree = 2 * X.n
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="480" height="400" viewBox="0 0 480 400">',
        '<rect width="480" height="400" fill="white"/>',
    ]
    for face in X.faces_of_dim(2):
        pts = [project(v.exponents) for v in face.key]
        cx = sum(p[0] for p in pts) / len(pts)
        cy = sum(p[1] for p in pts) / len(pts)
        pts.sort(key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
        fill = _FILL["top"] if face.label.degree == top_degree else _FILL[2]
        coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
        out.append(f'<polygon points="{coords}" fill="{fill}" stroke="none"><title>{face.label.pretty()}</title></polygon>')
    for face in X.faces_of_dim(1):
        (x1, y1), (x2, y2) = (project(v.exponents) for v in face.key)
        out.append(
            f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="black" stroke-width="1.5"/>'
        )
    for v in X.vertices():
        x, y = project(v.exponents)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.5" fill="black"/>')
        out.append(
            f'<text x="{_fmt(x + 5)}" y="{_fmt(y - 5)}" font-family="serif" font-size="12">{v.pretty()}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
