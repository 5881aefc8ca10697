"""Pentagram diagrams: a five-line star with the ten observables at its
intersections, surrounded by the five Fano planes of its contexts.

DOT output pins every node (``pos="x,y!"``) and is meant for ``neato -n``;
the SVG emitter draws the same layout directly.  Negative contexts and
negative Fano lines get a heavy stroke; in each Fano inset the three points
of the line at infinity sit on the inscribed circle.
"""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .enumerator import Pentagram
from .pauli import OBSERVABLES, ObservableKind
from .polar_space import Context, extend_to_fano, line_at_infinity

KIND_COLORS = {ObservableKind.A: "red", ObservableKind.B: "green", ObservableKind.C: "gold"}
HEAVY, LIGHT = 3, 1

STAR_RADIUS = 3.0
INSET_RADIUS = 7.5
INSET_SIZE = 1.6


def _label(i: int) -> str:
    return OBSERVABLES[i - 1].label


def _color(i: int) -> str:
    return KIND_COLORS[OBSERVABLES[i - 1].kind]


def _star_vertices():
    return [
        (STAR_RADIUS * math.cos(math.radians(90 + 72 * k)), STAR_RADIUS * math.sin(math.radians(90 + 72 * k)))
        for k in range(5)
    ]


def _intersect(l1, l2):
    (x1, y1), (x2, y2) = l1
    (x3, y3), (x4, y4) = l2
    d = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    a = x1 * y2 - y1 * x2
    b = x3 * y4 - y3 * x4
    return ((a * (x3 - x4) - (x1 - x2) * b) / d, (a * (y3 - y4) - (y1 - y2) * b) / d)


def star_layout(p: Pentagram) -> tuple[dict[int, tuple[float, float]], list[list[int]]]:
    """Point positions, and for each context its points in order along its line.

    Context ``k`` is drawn on the star line joining vertices ``k`` and ``k+2``.
    """
    v = _star_vertices()
    lines = [(v[k], v[(k + 2) % 5]) for k in range(5)]
    pos = {}
    for i in range(5):
        for j in range(i + 1, 5):
            pos[p.meet(i, j)] = _intersect(lines[i], lines[j])
    order = []
    for k, c in enumerate(p.contexts):
        (x0, y0), (x1, y1) = lines[k]
        t = {q: (pos[q][0] - x0) * (x1 - x0) + (pos[q][1] - y0) * (y1 - y0) for q in c.points}
        order.append(sorted(c.points, key=t.get))
    return pos, order


def fano_layout(c: Context) -> tuple[dict[int, tuple[float, float]], list[tuple[int, int, int]]]:
    """Positions inside a unit inset and the seven lines as ordered triples.

    Affine points go to the triangle's corners and centroid; the line at
    infinity is the triple of side midpoints (the inscribed circle).
    """
    a, b, c3, g = c.points
    ab, bc, ca = (OBSERVABLES[x - 1] + OBSERVABLES[y - 1] for x, y in ((a, b), (b, c3), (c3, a)))
    ab, bc, ca = ab.id, bc.id, ca.id
    corners = [(0.0, 1.0), (-math.sqrt(3) / 2, -0.5), (math.sqrt(3) / 2, -0.5)]
    pos = {a: corners[0], b: corners[1], c3: corners[2], g: (0.0, 0.0)}
    pos[ab] = ((corners[0][0] + corners[1][0]) / 2, (corners[0][1] + corners[1][1]) / 2)
    pos[bc] = ((corners[1][0] + corners[2][0]) / 2, (corners[1][1] + corners[2][1]) / 2)
    pos[ca] = ((corners[2][0] + corners[0][0]) / 2, (corners[2][1] + corners[0][1]) / 2)
    lines = [(a, ab, b), (b, bc, c3), (c3, ca, a), (a, g, bc), (b, g, ca), (c3, g, ab), (ab, bc, ca)]
    return pos, lines


def _inset_origin(k: int) -> tuple[float, float]:
    # between the star tips so that insets do not overlap the star
    ang = math.radians(90 + 72 * k + 36)
    return INSET_RADIUS * math.cos(ang), INSET_RADIUS * math.sin(ang)


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def render_dot(p: Pentagram, title: str | None = None) -> str:
    pos, order = star_layout(p)
    out = ["graph pentagram {", "  layout=neato;", "  node [shape=circle, style=filled, fontsize=10];"]
    if title:
        out.append(f'  label="{title}";')
    for q in p.points:
        x, y = pos[q]
        out.append(f'  p{q} [label="{_label(q)}", fillcolor={_color(q)}, pos="{_fmt(x)},{_fmt(y)}!"];')
    for k, (c, pts) in enumerate(zip(p.contexts, order)):
        width = HEAVY if c.negative else LIGHT
        for u, w in zip(pts, pts[1:]):
            out.append(f'  p{u} -- p{w} [class="context{k}", penwidth={width}];')
    for k, c in enumerate(p.contexts):
        plane = extend_to_fano(c)
        signs = {line.points: line.sign for line in plane.lines}
        inf = line_at_infinity(c)
        fpos, flines = fano_layout(c)
        ox, oy = _inset_origin(k)
        out.append(f"  subgraph cluster_fano{k} {{")
        sign = "+" if c.sign > 0 else "-"
        out.append(f'    label="context {k} ({sign}): plane {plane.plane_class.value}, '
                   f'infinity {" ".join(inf.labels)}";')
        for q, (x, y) in fpos.items():
            out.append(f'    f{k}_{q} [label="{_label(q)}", fillcolor={_color(q)}, '
                       f'pos="{_fmt(ox + INSET_SIZE * x)},{_fmt(oy + INSET_SIZE * y)}!"];')
        for line in flines:
            width = HEAVY if signs[tuple(sorted(line))] < 0 else LIGHT
            style = "dashed" if set(line) == set(inf.points) else "solid"
            cls = "infinity" if style == "dashed" else "fano"
            for u, w in zip(line, line[1:]):
                out.append(f'    f{k}_{u} -- f{k}_{w} [class="{cls}{k}", penwidth={width}, style={style}];')
            if style == "dashed":
                out.append(f'    f{k}_{line[2]} -- f{k}_{line[0]} [class="{cls}{k}", penwidth={width}, style={style}];')
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"


def render_svg(p: Pentagram, scale: float = 40.0) -> str:
    """A standalone SVG drawing of the same layout."""
    pos, order = star_layout(p)
    half = INSET_RADIUS + 2 * INSET_SIZE + 0.5
    size = 2 * half * scale

    def xy(x, y):
        return (x + half) * scale, (half - y) * scale

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0f}" height="{size:.0f}" '
             f'font-family="monospace" font-size="9">']

    def segment(a, b, width, dashed=False):
        (x1, y1), (x2, y2) = xy(*a), xy(*b)
        dash = ' stroke-dasharray="4,3"' if dashed else ""
        parts.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                     f'stroke="black" stroke-width="{width}"{dash}/>')

    def node(q, at):
        x, y = xy(*at)
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="11" fill="{_color(q)}" stroke="black"/>')
        parts.append(f'<text x="{x:.1f}" y="{y + 3:.1f}" text-anchor="middle">{escape(_label(q))}</text>')

    for c, pts in zip(p.contexts, order):
        segment(pos[pts[0]], pos[pts[-1]], HEAVY if c.negative else LIGHT)
    for q in p.points:
        node(q, pos[q])
    for k, c in enumerate(p.contexts):
        plane = extend_to_fano(c)
        signs = {line.points: line.sign for line in plane.lines}
        inf = set(line_at_infinity(c).points)
        fpos, flines = fano_layout(c)
        ox, oy = _inset_origin(k)
        at = {q: (ox + INSET_SIZE * x, oy + INSET_SIZE * y) for q, (x, y) in fpos.items()}
        for line in flines:
            width = HEAVY if signs[tuple(sorted(line))] < 0 else LIGHT
            if set(line) == inf:
                cx, cy = xy(ox, oy)
                parts.append(f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{0.5 * INSET_SIZE * scale:.1f}" '
                             f'fill="none" stroke="black" stroke-width="{width}"/>')
            else:
                segment(at[line[0]], at[line[2]], width)
        for q in plane.points:
            node(q, at[q])
        tx, ty = xy(ox, oy - INSET_SIZE - 0.4)
        parts.append(f'<text x="{tx:.1f}" y="{ty:.1f}" text-anchor="middle">'
                     f'{"+" if c.sign > 0 else "-"} / {plane.plane_class.value}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
