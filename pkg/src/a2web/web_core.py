"""Directed planar webs stored as combinatorial maps.

Edge ``e`` owns two darts: ``2e`` at its tail and ``2e + 1`` at its head, so the
mate of a dart is ``d ^ 1``. Vertices ``0..k-1`` are the top boundary ``t1..tk``,
the next ``m`` vertices the bottom boundary ``b1..bm``, the rest are internal.
``rotation[v]`` lists the darts at ``v`` counterclockwise.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import kernels


class WebError(ValueError):
    """Raised for malformed webs or pre-diagrams."""


def mate(d: int) -> int:
    return d ^ 1


def is_tail(d: int) -> bool:
    return d % 2 == 0


@dataclass(frozen=True, eq=False)
class Web:
    top: str
    bottom: str
    dart_vertex: tuple[int, ...]
    rotation: tuple[tuple[int, ...], ...]
    loops: int = 0

    @property
    def k(self) -> int:
        return len(self.top)

    @property
    def m(self) -> int:
        return len(self.bottom)

    @property
    def num_vertices(self) -> int:
        return len(self.rotation)

    @property
    def num_edges(self) -> int:
        return len(self.dart_vertex) // 2

    @property
    def internal_vertices(self) -> range:
        return range(self.k + self.m, self.num_vertices)

    def is_boundary(self, v: int) -> bool:
        return v < self.k + self.m

    def vertex_name(self, v: int) -> str:
        if v < self.k:
            return f"t{v + 1}"
        if v < self.k + self.m:
            return f"b{v - self.k + 1}"
        return f"i{v - self.k - self.m + 1}"

    def top_vertex(self, i: int) -> int:
        return i - 1

    def bottom_vertex(self, i: int) -> int:
        return self.k + i - 1

    def edges(self) -> list[tuple[int, int]]:
        dv = self.dart_vertex
        return [(dv[2 * e], dv[2 * e + 1]) for e in range(self.num_edges)]

    def canonical_form(self) -> str:
        return canonical_form(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Web):
            return NotImplemented
        return canonical_form(self) == canonical_form(other)

    def __hash__(self) -> int:
        return hash(canonical_form(self))


def check_web(w: Web) -> None:
    """Raise ``WebError`` unless ``w`` satisfies the web axioms."""
    nv = w.num_vertices
    if any(c not in "+-" for c in w.top + w.bottom):
        raise WebError("boundary signs must be + or -")
    seen = [0] * len(w.dart_vertex)
    for v, rot in enumerate(w.rotation):
        for d in rot:
            if w.dart_vertex[d] != v:
                raise WebError(f"dart {d} listed at wrong vertex")
            seen[d] += 1
        if w.is_boundary(v):
            if len(rot) != 1:
                raise WebError(f"boundary vertex {w.vertex_name(v)} has degree {len(rot)}")
            sign = w.top[v] if v < w.k else w.bottom[v - w.k]
            want_head = sign == "+"
            if is_tail(rot[0]) == want_head:
                raise WebError(f"boundary vertex {w.vertex_name(v)} has the wrong direction")
        else:
            if len(rot) != 3:
                raise WebError(f"internal vertex {w.vertex_name(v)} is not trivalent")
            if len({is_tail(d) for d in rot}) != 1:
                raise WebError(f"internal vertex {w.vertex_name(v)} is neither sink nor source")
    if any(c != 1 for c in seen) or any(not 0 <= x < nv for x in w.dart_vertex):
        raise WebError("darts and rotations are inconsistent")


# ---------------------------------------------------------------------------
# framed map, faces and depth


@dataclass
class _Framed:
    """The web together with a rectangular frame through its boundary vertices."""

    web: Web
    nd: int  # number of web darts
    vertex: list[int]
    rot: list[list[int]]
    pos: list[int]  # position of each dart inside its vertex rotation
    frame_left: dict[int, int] = field(default_factory=dict)
    frame_right: dict[int, int] = field(default_factory=dict)
    corner_dart: int = -1  # dart from the top-left corner down to the bottom-left one
    start_dart: int = -1  # dart from the top-left corner toward t1

    def ccw(self, d: int) -> int:
        r = self.rot[self.vertex[d]]
        return r[(self.pos[d] + 1) % len(r)]

    def cw(self, d: int) -> int:
        r = self.rot[self.vertex[d]]
        return r[(self.pos[d] - 1) % len(r)]


def _framed(w: Web) -> _Framed:
    nd = len(w.dart_vertex)
    nv = w.num_vertices
    vertex = list(w.dart_vertex)
    rot = [list(r) for r in w.rotation]
    TL, TR, BR, BL = nv, nv + 1, nv + 2, nv + 3
    rot += [[], [], [], []]
    f = _Framed(w, nd, vertex, rot, [])
    nxt = [nd]

    def frame_edge(u: int, v: int) -> tuple[int, int]:
        a = nxt[0]
        nxt[0] += 2
        vertex.extend([u, v])
        return a, a + 1

    top = [TL] + [w.top_vertex(i) for i in range(1, w.k + 1)] + [TR]
    bot = [BL] + [w.bottom_vertex(i) for i in range(1, w.m + 1)] + [BR]
    right_of: dict[int, int] = {}
    left_of: dict[int, int] = {}
    for line in (top, bot):
        for u, v in zip(line, line[1:]):
            a, b = frame_edge(u, v)
            right_of[u] = a
            left_of[v] = b
    tr_down, br_up = frame_edge(TR, BR)
    bl_up, tl_down = frame_edge(BL, TL)
    for i in range(1, w.k + 1):
        v = w.top_vertex(i)
        rot[v] = [right_of[v], left_of[v]] + rot[v]
        f.frame_right[v], f.frame_left[v] = right_of[v], left_of[v]
    for i in range(1, w.m + 1):
        v = w.bottom_vertex(i)
        rot[v] = [right_of[v]] + rot[v] + [left_of[v]]
        f.frame_right[v], f.frame_left[v] = right_of[v], left_of[v]
    rot[TL] = [right_of[TL], tl_down]
    rot[TR] = [left_of[TR], tr_down]
    rot[BR] = [br_up, left_of[BR]]
    rot[BL] = [right_of[BL], bl_up]
    f.corner_dart = tl_down
    f.start_dart = right_of[TL]
    pos = [0] * len(vertex)
    for r in rot:
        for i, d in enumerate(r):
            pos[d] = i
    f.pos = pos
    return f


@dataclass(frozen=True)
class FaceStructure:
    """Faces of a framed web.

    ``face_of[d]`` is the face to the left of web dart ``d``. ``depth`` is indexed
    by face id and ``outer`` is the face outside the frame (depth ``-1``).
    """

    face_of: tuple[int, ...]
    darts: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]
    infinite: int
    outer: int
    internal: tuple[int, ...]
    delta_top: tuple[int, ...]
    delta_bottom: tuple[int, ...]
    num_faces: int

    def face_size(self, f: int) -> int:
        return len(self.darts[f])


def faces(w: Web) -> FaceStructure:
    """Faces, path depths from the left region, and boundary depth differences."""
    if w.loops:
        raise WebError("faces() is undefined for webs with free loops")
    fr = _framed(w)
    total = len(fr.vertex)
    nxt = [fr.cw(d ^ 1) for d in range(total)]
    labels, count = kernels.cycle_labels(nxt)
    wall = [d >= fr.nd for d in range(total)]
    mates = [d ^ 1 for d in range(total)]
    inf = labels[fr.corner_dart]
    depth = kernels.dual_bfs(labels, mates, wall, count, inf)
    outer = labels[fr.corner_dart ^ 1]
    members: list[list[int]] = [[] for _ in range(count)]
    has_frame = [False] * count
    for d in range(total):
        if d < fr.nd:
            members[labels[d]].append(d)
        else:
            has_frame[labels[d]] = True
    internal = tuple(f for f in range(count) if not has_frame[f])
    # components not attached to the boundary sit in some face we cannot see
    if any(depth[f] < 0 for f in internal):
        raise WebError("web has a component detached from the boundary")
    delta_top = []
    for i in range(1, w.k + 1):
        v = w.top_vertex(i)
        left = labels[fr.frame_left[v]]
        right = labels[w.rotation[v][0]]
        delta_top.append(depth[right] - depth[left])
    delta_bottom = []
    for i in range(1, w.m + 1):
        v = w.bottom_vertex(i)
        left = labels[w.rotation[v][0]]
        right = labels[fr.frame_right[v]]
        delta_bottom.append(depth[right] - depth[left])
    return FaceStructure(
        face_of=tuple(labels[: fr.nd]),
        darts=tuple(tuple(m) for m in members),
        depth=tuple(depth),
        infinite=inf,
        outer=outer,
        internal=internal,
        delta_top=tuple(delta_top),
        delta_bottom=tuple(delta_bottom),
        num_faces=count,
    )


def internal_face_sizes(w: Web) -> list[int]:
    fs = faces(w)
    return [fs.face_size(f) for f in fs.internal]


def is_nonelliptic(w: Web) -> bool:
    """True iff every internal face has at least six edge incidences."""
    if w.loops:
        return False
    return all(s >= 6 for s in internal_face_sizes(w))


def euler_characteristic(w: Web) -> int:
    """``V - E + F`` of the framed map (2 for a connected planar map)."""
    fs = faces(w)
    fr = _framed(w)
    return len(fr.rot) - len(fr.vertex) // 2 + fs.num_faces


# ---------------------------------------------------------------------------
# canonical form


def canonical_form(w: Web) -> str:
    """Encode the framed map by a traversal anchored at the top-left frame corner."""
    fr = _framed(w)
    nv = w.num_vertices
    label = {fr.vertex[fr.start_dart]: 0}
    order = [(fr.vertex[fr.start_dart], fr.start_dart)]
    i = 0
    while i < len(order):
        v, first = order[i]
        i += 1
        d = first
        while True:
            u = fr.vertex[d ^ 1]
            if u not in label:
                label[u] = len(order)
                order.append((u, d ^ 1))
            d = fr.ccw(d)
            if d == first:
                break
    parts = []
    for v, first in order:
        items = []
        d = first
        while True:
            u = label[fr.vertex[d ^ 1]]
            kind = "f" if d >= fr.nd else ("o" if is_tail(d) else "i")
            items.append(f"{kind}{u}")
            d = fr.ccw(d)
            if d == first:
                break
        parts.append(".".join(items))
    reached = {v for v, _ in order}
    floating = [v for v in range(nv) if v not in reached]
    text = f"{w.top}|{w.bottom}|" + ";".join(parts)
    if floating:
        text += "|closed:" + ",".join(sorted(_closed_codes(w, floating)))
    if w.loops:
        text += f"|loops={w.loops}"
    return text


def _closed_codes(w: Web, vertices: Sequence[int]) -> list[str]:
    """Canonical codes (minimum over roots) of components missed by the frame traversal."""
    rot = w.rotation
    pos = {d: i for r in rot for i, d in enumerate(r)}
    todo = set(vertices)
    codes = []
    while todo:
        start = min(todo)
        comp = set()
        stack = [start]
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(w.dart_vertex[d ^ 1] for d in rot[v])
        todo -= comp
        best = None
        for v in comp:
            for root in rot[v]:
                code = _traverse_code(w, root, pos)
                if best is None or code < best:
                    best = code
        codes.append(best)
    return codes


def _traverse_code(w: Web, root: int, pos: dict[int, int]) -> str:
    dv = w.dart_vertex
    label = {dv[root]: 0}
    order = [root]
    i = 0
    parts = []
    while i < len(order):
        first = order[i]
        i += 1
        r = w.rotation[dv[first]]
        items = []
        for j in range(len(r)):
            d = r[(pos[first] + j) % len(r)]
            u = dv[d ^ 1]
            if u not in label:
                label[u] = len(order)
                order.append(d ^ 1)
            items.append(("o" if is_tail(d) else "i") + str(label[u]))
        parts.append(".".join(items))
    return ";".join(parts)


def short_id(w: Web) -> str:
    return hashlib.sha1(canonical_form(w).encode()).hexdigest()[:10]


# ---------------------------------------------------------------------------
# text format


def format_web(w: Web) -> str:
    lines = [f"top={w.top};bot={w.bottom}"]
    edges = [f"{w.vertex_name(u)}>{w.vertex_name(v)}" for u, v in w.edges()]
    lines.append("edges=" + ",".join(edges))
    for v in w.internal_vertices:
        lines.append(f"{w.vertex_name(v)}: " + ",".join(f"e{d // 2 + 1}" for d in w.rotation[v]))
    if w.loops:
        lines.append(f"loops={w.loops}")
    return "\n".join(lines) + "\n"


def parse_web(text: str) -> Web:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    try:
        head = dict(part.split("=", 1) for part in lines[0].split(";"))
        top, bottom = head["top"], head["bot"]
        edge_text = lines[1].split("=", 1)[1] if len(lines) > 1 and lines[1].startswith("edges=") else ""
        k, m = len(top), len(bottom)

        def vid(name: str) -> int:
            kind, num = name[0], int(name[1:])
            if kind == "t":
                return num - 1
            if kind == "b":
                return k + num - 1
            if kind == "i":
                return k + m + num - 1
            raise ValueError(name)

        edges = [tuple(vid(x) for x in e.split(">")) for e in edge_text.split(",") if e]
        nv = max([k + m - 1] + [max(e) for e in edges]) + 1
        dart_vertex = []
        for u, v in edges:
            dart_vertex += [u, v]
        rotation: list[list[int]] = [[] for _ in range(nv)]
        loops = 0
        for ln in lines[1:]:
            if ln.startswith("edges="):
                continue
            if ln.startswith("loops="):
                loops = int(ln.split("=")[1])
                continue
            name, rest = ln.split(":")
            v = vid(name.strip())
            for tok in rest.split(","):
                e = int(tok.strip()[1:]) - 1
                u, x = edges[e]
                rotation[v].append(2 * e if u == v else 2 * e + 1)
        for e, (u, v) in enumerate(edges):
            for d, x in ((2 * e, u), (2 * e + 1, v)):
                if x < k + m:
                    rotation[x].append(d)
    except (ValueError, KeyError, IndexError) as exc:
        raise WebError(f"malformed web text: {exc}") from exc
    w = Web(top, bottom, tuple(dart_vertex), tuple(tuple(r) for r in rotation), loops)
    check_web(w)
    return w


# ---------------------------------------------------------------------------
# pre-diagrams and trivalization


@dataclass(frozen=True)
class Curve:
    """A directed curve between two boundary endpoints such as ``("b", 3)``.

    ``crossings`` lists crossing ids in order from ``start`` to ``end``.
    """

    start: tuple[str, int]
    end: tuple[str, int]
    crossings: tuple[int, ...] = ()
    kind: str = "strand"


@dataclass(frozen=True)
class PreDiagram:
    """Curves with transversal crossings, before trivalization.

    ``crossings[c]`` gives the four curve ends at crossing ``c`` counterclockwise, each
    as ``(curve, "in")`` for the part before the crossing or ``(curve, "out")``.
    ``ends`` maps a boundary endpoint to its curve ends ``(curve, "start"|"end")``
    in counterclockwise order around the boundary vertex.
    """

    top: str
    bottom: str
    curves: tuple[Curve, ...]
    crossings: tuple[tuple[tuple[int, str], ...], ...]
    ends: dict = field(default_factory=dict, hash=False, compare=False)


@dataclass(frozen=True)
class Trivalized:
    web: Web
    # per web edge: ("seg", curve, index) | ("mid", crossing) | ("lift", endpoint)
    provenance: tuple[tuple, ...]


def trivalize(p: PreDiagram) -> Web:
    return trivalize_with_provenance(p).web


def trivalize_with_provenance(p: PreDiagram) -> Trivalized:
    k, m = len(p.top), len(p.bottom)
    nv = [k + m]
    dart_vertex: list[int] = []
    prov: list[tuple] = []
    rotation: dict[int, list[int]] = {}

    def new_vertex() -> int:
        nv[0] += 1
        return nv[0] - 1

    def new_edge(tag: tuple) -> int:
        e = len(prov)
        prov.append(tag)
        dart_vertex.extend([-1, -1])
        return e

    def endpoint_vertex(pt: tuple[str, int]) -> int:
        side, i = pt
        size = k if side == "t" else m
        if not 1 <= i <= size:
            raise WebError(f"endpoint {pt} out of range")
        return i - 1 if side == "t" else k + i - 1

    seg_edges = []
    for c, curve in enumerate(p.curves):
        seg_edges.append([new_edge(("seg", c, s)) for s in range(len(curve.crossings) + 1)])

    # crossings become a sink and a source joined by a middle edge
    for x, ends in enumerate(p.crossings):
        if len(ends) != 4:
            raise WebError(f"crossing {x} does not have four ends")
        darts = []
        for c, side in ends:
            idx = p.curves[c].crossings.index(x)
            e = seg_edges[c][idx] if side == "in" else seg_edges[c][idx + 1]
            darts.append(2 * e + 1 if side == "in" else 2 * e)
        ins = [i for i, d in enumerate(darts) if not is_tail(d)]
        if len(ins) != 2 or (ins[1] - ins[0]) % 4 not in (1, 3):
            raise WebError(f"crossing {x} cannot be trivalized")
        first = ins[0] if (ins[0] + 1) % 4 == ins[1] else ins[1]
        cyc = [darts[(first + j) % 4] for j in range(4)]
        sink, source = new_vertex(), new_vertex()
        mid = new_edge(("mid", x))
        rotation[sink] = [cyc[0], cyc[1], 2 * mid + 1]
        rotation[source] = [cyc[2], cyc[3], 2 * mid]
        for v in (sink, source):
            for d in rotation[v]:
                dart_vertex[d] = v

    # boundary endpoints, lifting the degree-2 ones
    incident: dict[tuple[str, int], list[int]] = {}
    for c, curve in enumerate(p.curves):
        incident.setdefault(curve.start, []).append(2 * seg_edges[c][0])
        incident.setdefault(curve.end, []).append(2 * seg_edges[c][-1] + 1)
    for pt, darts in incident.items():
        v = endpoint_vertex(pt)
        if len(darts) == 1:
            rotation[v] = darts
            dart_vertex[darts[0]] = v
            continue
        if len(darts) != 2:
            raise WebError(f"endpoint {pt} has curve-degree {len(darts)}")
        order = p.ends.get(pt)
        if order is None:
            raise WebError(f"endpoint {pt} needs a counterclockwise end order")
        darts = [
            2 * seg_edges[c][0] if which == "start" else 2 * seg_edges[c][-1] + 1
            for c, which in order
        ]
        if is_tail(darts[0]) != is_tail(darts[1]):
            raise WebError(f"endpoint {pt} mixes incoming and outgoing curves")
        y = new_vertex()
        sink = not is_tail(darts[0])
        lift = new_edge(("lift", pt))
        # edge between boundary vertex and lift vertex; flows into y when y is a sink
        to_y, to_v = (2 * lift + 1, 2 * lift) if sink else (2 * lift, 2 * lift + 1)
        rotation[v] = [to_v]
        dart_vertex[to_v] = v
        rotation[y] = darts + [to_y] if pt[0] == "b" else [to_y] + darts
        for d in rotation[y]:
            dart_vertex[d] = y
    for i in range(k + m):
        if i not in rotation:
            raise WebError(f"boundary vertex {i} has no curve")
    web = Web(
        p.top,
        p.bottom,
        tuple(dart_vertex),
        tuple(tuple(rotation[v]) for v in range(nv[0])),
    )
    check_web(web)
    return Trivalized(web, tuple(prov))


# ---------------------------------------------------------------------------
# geometric assembly of pre-diagrams from arcs and strands


@dataclass(frozen=True)
class Arc:
    """A semicircle on the bottom line (``hanging=False``) or hanging from the top line."""

    left: int
    right: int
    hanging: bool = False

    def h2(self, x: Fraction) -> Fraction:
        return (x - self.left) * (self.right - x)

    def encloses(self, x) -> bool:
        return self.left < x < self.right


def _arc_crossing(a: Arc, b: Arc) -> Fraction | None:
    if a.left > b.left:
        a, b = b, a
    if not a.left < b.left < a.right < b.right:
        return None
    num = b.left * b.right - a.left * a.right
    return Fraction(num, b.left + b.right - a.left - a.right)


def _arc_tangent(a: Arc, x: Fraction) -> float:
    """Angle of the direction moving rightward along ``a`` at abscissa ``x``."""
    c = (a.left + a.right) / 2
    y = math.sqrt(float(a.h2(x)))
    slope_sign = -1.0 if not a.hanging else 1.0
    return math.atan2(slope_sign * (float(x) - c), y)


def _ccw_sort(ends: list[tuple[float, tuple[int, str]]]) -> tuple[tuple[int, str], ...]:
    return tuple(e for _, e in sorted(ends, key=lambda t: t[0] % (2 * math.pi)))


def assemble(
    k: int,
    m: int,
    top_configs: Sequence[tuple[int, int, int]] = (),
    bottom_configs: Sequence[tuple[int, int, int]] = (),
    strands: Sequence[tuple[int, int]] = (),
) -> PreDiagram:
    """Lay out m-configurations and strands as semicircles and lines.

    Bottom configurations ``(i, j, l)`` sit on ``b1..bm`` with arcs directed toward
    the middle ``j``. Top configurations hang from ``t1..tk`` with arcs directed away
    from the middle. ``strands[p] = (alpha, beta)`` runs from ``b_beta`` up to
    ``t_alpha``; two strands cross once exactly when their endpoints are inverted.
    """
    curves: list[dict] = []
    ends: dict[tuple[str, int], tuple] = {}
    for (i, j, l) in bottom_configs:
        left = len(curves)
        curves.append(dict(start=("b", i), end=("b", j), arc=Arc(i, j), kind="arc", xs=[]))
        curves.append(dict(start=("b", l), end=("b", j), arc=Arc(j, l), kind="arc", xs=[]))
        ends[("b", j)] = ((left + 1, "end"), (left, "end"))
    for (i, j, l) in top_configs:
        left = len(curves)
        curves.append(dict(start=("t", j), end=("t", i), arc=Arc(i, j, True), kind="arc", xs=[]))
        curves.append(dict(start=("t", j), end=("t", l), arc=Arc(j, l, True), kind="arc", xs=[]))
        ends[("t", j)] = ((left, "start"), (left + 1, "start"))
    first_strand = len(curves)
    for alpha, beta in strands:
        curves.append(dict(start=("b", beta), end=("t", alpha), arc=None, kind="strand", xs=[]))

    crossings: list[tuple] = []
    # each curve collects (sort key, crossing id); sort keys increase along the curve

    def arc_key(c: int, x: Fraction) -> Fraction:
        a = curves[c]["arc"]
        forward = curves[c]["start"][1] == a.left
        return x if forward else -x

    def arc_end_dirs(c: int, x: Fraction) -> list[tuple[float, tuple[int, str]]]:
        a = curves[c]["arc"]
        theta = _arc_tangent(a, x)
        forward = curves[c]["start"][1] == a.left
        right = (c, "out" if forward else "in")
        left = (c, "in" if forward else "out")
        return [(theta, right), (theta + math.pi, left)]

    arc_ids = [c for c in range(first_strand)]
    for ai, c1 in enumerate(arc_ids):
        for c2 in arc_ids[ai + 1:]:
            a1, a2 = curves[c1]["arc"], curves[c2]["arc"]
            if a1.hanging != a2.hanging:
                continue
            x = _arc_crossing(a1, a2)
            if x is None:
                continue
            cid = len(crossings)
            crossings.append(_ccw_sort(arc_end_dirs(c1, x) + arc_end_dirs(c2, x)))
            curves[c1]["xs"].append((arc_key(c1, x), cid))
            curves[c2]["xs"].append((arc_key(c2, x), cid))

    up, down = math.pi / 2, 3 * math.pi / 2
    for p, (alpha, beta) in enumerate(strands):
        s = first_strand + p
        for c in arc_ids:
            a = curves[c]["arc"]
            x = Fraction(alpha if a.hanging else beta)
            if not a.encloses(x):
                continue
            cid = len(crossings)
            crossings.append(_ccw_sort(arc_end_dirs(c, x) + [(up, (s, "out")), (down, (s, "in"))]))
            curves[c]["xs"].append((arc_key(c, x), cid))
            # bottom arcs: lower first; top arcs: outermost (lowest) first
            height = a.h2(x)
            key = (0, height) if not a.hanging else (2, -height)
            curves[s]["xs"].append((key, cid))

    # wiring zone: bubble sort the strands from bottom order into top order
    order = sorted(range(len(strands)), key=lambda p: strands[p][1])
    layer = 0
    changed = True
    while changed:
        changed = False
        for slot in range(len(order) - 1):
            p, q = order[slot], order[slot + 1]
            if strands[p][0] > strands[q][0]:
                # p moves right while going up
                cid = len(crossings)
                sp, sq = first_strand + p, first_strand + q
                crossings.append(((sp, "out"), (sq, "out"), (sp, "in"), (sq, "in")))
                curves[sp]["xs"].append(((1, layer), cid))
                curves[sq]["xs"].append(((1, layer), cid))
                order[slot], order[slot + 1] = q, p
                layer += 1
                changed = True

    final = []
    for c in curves:
        keys = [key for key, _ in c["xs"]]
        if len(set(keys)) != len(keys):
            raise WebError("three curves meet at a point")
        xs = tuple(cid for _, cid in sorted(c["xs"]))
        final.append(Curve(c["start"], c["end"], xs, c["kind"]))
    return PreDiagram("+" * k, "-" * m, tuple(final), tuple(crossings), ends)


def prediagram_arcs(p: PreDiagram, top_configs, bottom_configs) -> list[Arc]:
    """Arcs in the order ``assemble`` created them, for geometric oracles."""
    arcs = []
    for (i, j, l) in bottom_configs:
        arcs += [Arc(i, j), Arc(j, l)]
    for (i, j, l) in top_configs:
        arcs += [Arc(i, j, True), Arc(j, l, True)]
    return arcs


def strands_web(sigma: Sequence[int]) -> Trivalized:
    """Trivalized permutation diagram: strand ``i`` joins ``t_i`` and ``b_sigma(i)``."""
    ell = len(sigma)
    pre = assemble(ell, ell, strands=[(i + 1, s) for i, s in enumerate(sigma)])
    return trivalize_with_provenance(pre)


def identity_web(k: int) -> Web:
    return strands_web(list(range(1, k + 1))).web
