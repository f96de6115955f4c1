"""SVG rendering of a principal Newton polygon with its phi-index lattice points."""

from __future__ import annotations

from xml.sax.saxutils import escape

from puremono.newton import NewtonPolygon, index_points

CELL = 48
MARGIN = 56


def render_polygon_svg(poly: NewtonPolygon, title: str = "", points=()) -> str:
    """Grid, axes, polygon, vertex labels, slope per side, and a cross per index point.

    ``points`` are extra (i, u) data points drawn as small dots.
    """
    xmax = max([poly.end] + [i for i, _ in points]) + 1
    ymax = max([u for _, u in poly.vertices] + [u for _, u in points if isinstance(u, int)]) + 1
    width = 2 * MARGIN + xmax * CELL
    height = 2 * MARGIN + ymax * CELL

    def sx(i):
        return MARGIN + i * CELL

    def sy(u):
        return height - MARGIN - u * CELL

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f"<title>{escape(title)}</title>",
        '<g class="grid" stroke="#ddd" stroke-width="1">',
    ]
    for i in range(xmax + 1):
        out.append(f'<line x1="{sx(i)}" y1="{sy(0)}" x2="{sx(i)}" y2="{sy(ymax)}"/>')
    for u in range(ymax + 1):
        out.append(f'<line x1="{sx(0)}" y1="{sy(u)}" x2="{sx(xmax)}" y2="{sy(u)}"/>')
    out.append("</g>")
    out.append('<g class="axes" stroke="black" stroke-width="1.5">')
    out.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(xmax)}" y2="{sy(0)}"/>')
    out.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(ymax)}"/>')
    out.append("</g>")
    out.append('<g class="ticks">')
    for i in range(xmax + 1):
        out.append(f'<text x="{sx(i)}" y="{sy(0) + 18}" text-anchor="middle">{i}</text>')
    for u in range(1, ymax + 1):
        out.append(f'<text x="{sx(0) - 10}" y="{sy(u) + 4}" text-anchor="end">{u}</text>')
    out.append("</g>")
    for i, u in points:
        if isinstance(u, int):
            out.append(f'<circle class="data-point" cx="{sx(i)}" cy="{sy(u)}" r="3" fill="#888"/>')
    if len(poly.vertices) > 1:
        coords = " ".join(f"{sx(i)},{sy(u)}" for i, u in poly.vertices)
        out.append(f'<polyline class="polygon" points="{coords}" fill="none" stroke="#1f4e9c" stroke-width="2.5"/>')
    for i, u in poly.vertices:
        out.append(f'<circle class="vertex" cx="{sx(i)}" cy="{sy(u)}" r="4" fill="#1f4e9c"/>')
        out.append(f'<text class="vertex-label" x="{sx(i) + 6}" y="{sy(u) - 6}">({i},{u})</text>')
    for k, s in enumerate(poly.sides, start=1):
        mx = (sx(s.start[0]) + sx(s.end[0])) / 2
        my = (sy(s.start[1]) + sy(s.end[1])) / 2
        label = f"S{k}: slope {s.slope}, e={s.ramification}, d={s.degree}"
        out.append(f'<text class="slope" x="{mx + 8}" y="{my - 8}" fill="#1f4e9c">{escape(label)}</text>')
    r = 5
    for i, u in index_points(poly):
        x, y = sx(i), sy(u)
        out.append(
            f'<path class="cross" d="M{x - r},{y - r} L{x + r},{y + r} M{x - r},{y + r} L{x + r},{y - r}" '
            f'stroke="#c0392b" stroke-width="2"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
