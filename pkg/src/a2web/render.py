"""SVG pictures of webs, m-diagrams, permutation diagrams and flow diagrams.

Output is plain SVG 1.1 text built by string formatting, so the same object
always gives the same bytes.
"""

from __future__ import annotations

import math
from collections import deque

from .flow import LabeledTriangle
from .m_diagrams import MDiagram
from .rs_perm import PermDiagram
from .web_core import Web, faces

SCALE = 40.0
COLORS = {1: "#1f77b4", 2: "#d62728", 3: "#2ca02c"}


def _num(x: float) -> str:
    return f"{x:.2f}".rstrip("0").rstrip(".")


def _document(width: float, height: float, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">\n'
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" "
        "markerWidth=\"5\" markerHeight=\"5\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\"/></marker></defs>\n"
    )
    return head + "\n".join(body) + "\n</svg>\n"


def _line(p, q, extra: str = "") -> str:
    return (
        f'<line x1="{_num(p[0])}" y1="{_num(p[1])}" x2="{_num(q[0])}" y2="{_num(q[1])}" '
        f'stroke="black" {extra}/>'
    )


def _text(p, s: str, size: int = 10, color: str = "black") -> str:
    return f'<text x="{_num(p[0])}" y="{_num(p[1])}" font-size="{size}" fill="{color}" text-anchor="middle">{s}</text>'


def _dot(p, r: float = 3.0) -> str:
    return f'<circle cx="{_num(p[0])}" cy="{_num(p[1])}" r="{_num(r)}"/>'


def web_layout(w: Web, iterations: int = 200) -> list[tuple[float, float]]:
    """Boundary vertices at integer x; internal vertices by barycentric relaxation.

    Internal vertices start on layers given by their graph distance from the top
    boundary relative to the bottom boundary.
    """
    nv = w.num_vertices
    adj: list[list[int]] = [[] for _ in range(nv)]
    for u, v in w.edges():
        adj[u].append(v)
        adj[v].append(u)
    width = max(w.k, w.m, 1)
    height = max(2.0, width / 2)

    def dist(sources) -> list[float]:
        d = [math.inf] * nv
        q = deque()
        for s in sources:
            d[s] = 0
            q.append(s)
        while q:
            u = q.popleft()
            for v in adj[u]:
                if d[v] == math.inf:
                    d[v] = d[u] + 1
                    q.append(v)
        return d

    dt = dist(range(w.k))
    db = dist(range(w.k, w.k + w.m))
    pos = [(0.0, 0.0)] * nv
    for i in range(w.k):
        pos[i] = (float(i + 1), 0.0)
    for i in range(w.m):
        pos[w.k + i] = (float(i + 1), height)
    for v in w.internal_vertices:
        a, b = dt[v], db[v]
        frac = 0.5 if a == b == math.inf else (1.0 if a == math.inf else 0.0 if b == math.inf else a / (a + b))
        pos[v] = ((width + 1) / 2 + 0.01 * (v % 7), height * frac)
    for _ in range(iterations):
        new = list(pos)
        for v in w.internal_vertices:
            if adj[v]:
                new[v] = (
                    sum(pos[u][0] for u in adj[v]) / len(adj[v]),
                    sum(pos[u][1] for u in adj[v]) / len(adj[v]),
                )
        pos = new
    return pos


def render_web(w: Web, depths: bool = False) -> str:
    pos = web_layout(w)
    margin = 1.0
    width = (max(w.k, w.m, 1) + 2 * margin) * SCALE
    height = (max(p[1] for p in pos) + 2 * margin) * SCALE

    def xy(p):
        return ((p[0] + margin - 0.5) * SCALE, (p[1] + margin) * SCALE)

    body = []
    for u, v in w.edges():
        p, q = xy(pos[u]), xy(pos[v])
        mid = ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
        body.append(_line(p, mid, 'marker-end="url(#arrow)"'))
        body.append(_line(mid, q))
    for v in range(w.num_vertices):
        body.append(_dot(xy(pos[v])))
    for i in range(w.k):
        p = xy(pos[i])
        body.append(_text((p[0], p[1] - 8), f"{i + 1}{w.top[i]}"))
    for i in range(w.m):
        p = xy(pos[w.k + i])
        body.append(_text((p[0], p[1] + 16), f"{i + 1}{w.bottom[i]}"))
    if depths and not w.loops:
        fs = faces(w)
        for f, ds in enumerate(fs.darts):
            if not ds or f == fs.infinite:
                continue
            pts = [xy(pos[w.dart_vertex[d]]) for d in ds]
            c = (sum(p[0] for p in pts) / len(pts), sum(p[1] for p in pts) / len(pts))
            body.append(_text(c, str(fs.depth[f]), 9, "#888888"))
    return _document(width, height, body)


def render_m_diagram(m: MDiagram) -> str:
    width = (m.num_vertices + 1) * SCALE
    radius = max((b - a for a, b in m.arcs), default=1) / 2
    base = (radius + 1) * SCALE
    body = [_line((SCALE / 2, base), (width - SCALE / 2, base), 'stroke-dasharray="2,2"')]
    for a, b in m.arcs:
        r = (b - a) / 2 * SCALE
        body.append(
            f'<path d="M{_num(a * SCALE)},{_num(base)} A{_num(r)},{_num(r)} 0 0 1 {_num(b * SCALE)},{_num(base)}" '
            'fill="none" stroke="black"/>'
        )
    for v in range(1, m.num_vertices + 1):
        body.append(_dot((v * SCALE, base)))
        body.append(_text((v * SCALE, base + 16), str(v)))
    return _document(width, base + SCALE, body)


def render_perm_diagram(d: PermDiagram) -> str:
    ell = len(d.perm)
    width = (ell + 1) * SCALE
    height = 3 * SCALE
    body = []
    for i, s in enumerate(d.perm, start=1):
        body.append(_line((i * SCALE, SCALE), (s * SCALE, 2 * SCALE)))
    for i in range(1, ell + 1):
        body += [_dot((i * SCALE, SCALE)), _text((i * SCALE, SCALE - 8), f"t{i}")]
        body += [_dot((i * SCALE, 2 * SCALE)), _text((i * SCALE, 2 * SCALE + 16), f"b{i}")]
    return _document(width, height, body)


def _grid_point(r: int, c: int) -> tuple[float, float]:
    return (c + r / 2, r * math.sqrt(3) / 2)


def flow_edge_points(key, n: int) -> tuple[tuple[float, float], tuple[float, float]]:
    """End points of a grid edge in the plane, top edge ``i`` spanning ``[i-1, i]``."""
    kind = key[0]
    if kind == "t":
        i = key[1]
        return _grid_point(0, i - 1), _grid_point(0, i)
    i, j = key[1], key[2]
    r, c = j - i - 1, i - 1
    if kind == "r":
        return _grid_point(r, c + 1), _grid_point(r + 1, c)
    if kind == "l":
        return _grid_point(r, c + 1), _grid_point(r + 1, c + 1)
    return _grid_point(r + 1, c), _grid_point(r + 1, c + 1)


def render_flow(d: LabeledTriangle) -> str:
    n = d.side
    margin = 1.0

    def xy(p):
        return ((p[0] + margin) * SCALE, (p[1] + margin) * SCALE)

    corners = [xy(_grid_point(0, 0)), xy(_grid_point(0, n)), xy(_grid_point(n, 0))]
    body = [
        '<polygon points="' + " ".join(f"{_num(x)},{_num(y)}" for x, y in corners)
        + '" fill="none" stroke="#bbbbbb"/>'
    ]
    for key in sorted(d.edge_labels, key=lambda k: (k[0],) + k[1:]):
        label = d.edge_labels[key]
        p, q = (xy(t) for t in flow_edge_points(key, n))
        color = COLORS.get(label, "black")
        body.append(_line(p, q, f'stroke-width="3" style="stroke:{color}"'))
        mid = ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2 - 3)
        body.append(_text(mid, str(label), 8, color))
    for pos, s in enumerate(d.word.symbols, start=1):
        if s:
            text = f"{-s}&#773;" if s < 0 else str(s)
            body.append(_text(xy((pos - 0.5, -0.3)), text, 11))
    if d.word.wall is not None:
        wall = xy((d.word.wall, 0))
        body.append(_line((wall[0], wall[1] - 25), (wall[0], wall[1]), 'stroke-dasharray="3,2"'))
    width = (n + 2 * margin) * SCALE
    height = (n * math.sqrt(3) / 2 + 2 * margin) * SCALE
    return _document(width, height, body)


def render_svg(obj, depths: bool = False) -> str:
    if isinstance(obj, Web):
        return render_web(obj, depths)
    if isinstance(obj, MDiagram):
        return render_m_diagram(obj)
    if isinstance(obj, PermDiagram):
        return render_perm_diagram(obj)
    if isinstance(obj, LabeledTriangle):
        return render_flow(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")
