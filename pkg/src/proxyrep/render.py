"""Number-line SVG drawings of instances and proxy arrangements."""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .geometry import Arrangement, Instance

WIDTH, HEIGHT = 1200, 200
AXIS_Y = 100
X_MIN, X_MAX = Fraction(-1, 2), Fraction(3, 2)


def x_pixel(x) -> Fraction:
    """Affine map of [-1/2, 3/2] onto [0, WIDTH]."""
    return (Fraction(x) - X_MIN) * WIDTH / (X_MAX - X_MIN)


def _num(v) -> str:
    return f"{float(v):.3f}"


def _vline(x, cls: str, width: int, dash: str) -> str:
    px = _num(x_pixel(x))
    return (f'<line class="{cls}" x1="{px}" y1="40" x2="{px}" y2="160" stroke="#555" '
            f'stroke-width="{width}" stroke-dasharray="{dash}"/>')


def render_svg(inst: Instance, arr: Optional[Arrangement] = None, bisectors: bool = True) -> str:
    """Candidates as squares, proxies as filled circles, bisectors as dashed verticals.

    Candidate bisectors are thin; bisectors between adjacent proxies are bold.
    """
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
           f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
           f'<line class="axis" x1="0" y1="{AXIS_Y}" x2="{WIDTH}" y2="{AXIS_Y}" '
           f'stroke="black" stroke-width="1"/>']
    for t in (0, 1):
        px = _num(x_pixel(t))
        out.append(f'<text x="{px}" y="{AXIS_Y + 30}" text-anchor="middle" '
                   f'font-size="14">{t}</text>')
    if bisectors:
        out.extend(_vline(b, "candidate-bisector", 1, "4,4") for b in inst.bisectors)
        if arr is not None:
            out.extend(_vline(b, "proxy-bisector", 3, "8,4") for b in arr.bisectors)
    for c in inst.candidates:
        px = x_pixel(c)
        out.append(f'<rect class="candidate" x="{_num(px - 6)}" y="{AXIS_Y - 6}" '
                   f'width="12" height="12" fill="white" stroke="black"/>')
    if arr is not None:
        for p in arr.proxies:
            out.append(f'<circle class="proxy" cx="{_num(x_pixel(p))}" cy="{AXIS_Y}" r="6" '
                       f'fill="#c0392b"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
