"""m-diagrams: arcs over a line of vertices built from standard tableaux with three rows."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .tableaux import Tableau, TableauError


@dataclass(frozen=True)
class MDiagram:
    """Arcs ``(left, right)`` on vertices ``1..num_vertices``.

    ``configs`` holds the m-configurations ``(i, j, l)`` made of arcs ``i-j`` and
    ``j-l``; ``singles`` holds arcs that belong to no m-configuration.
    """

    num_vertices: int
    configs: tuple[tuple[int, int, int], ...]
    singles: tuple[tuple[int, int], ...] = ()

    @property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        out = [a for i, j, l in self.configs for a in ((i, j), (j, l))]
        return tuple(sorted(out + list(self.singles)))

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.arcs)

    @property
    def isolated(self) -> tuple[int, ...]:
        used = {v for arc in self.arcs for v in arc}
        return tuple(v for v in range(1, self.num_vertices + 1) if v not in used)


def build_m_diagram(t: Tableau, num_vertices: int | None = None) -> MDiagram:
    """Greedy arc drawing: each third-row entry joins the largest free smaller
    second-row entry, then each second-row entry joins the largest free smaller
    first-row entry."""
    if t.is_skew or len(t.rows) > 3:
        raise TableauError("build_m_diagram expects a straight shape with at most 3 rows")
    if len(set(t.entries())) != len(t):
        raise TableauError("build_m_diagram expects distinct entries")
    rows = list(t.rows) + [()] * (3 - len(t.rows))
    upper: dict[int, int] = {}
    taken: set[int] = set()
    for ell in rows[2]:
        cand = [j for j in rows[1] if j < ell and j not in taken]
        if not cand:
            raise TableauError(f"no second-row partner for {ell}")
        j = max(cand)
        taken.add(j)
        upper[j] = ell
    lower: dict[int, int] = {}
    taken = set()
    for j in rows[1]:
        cand = [i for i in rows[0] if i < j and i not in taken]
        if not cand:
            raise TableauError(f"no first-row partner for {j}")
        i = max(cand)
        taken.add(i)
        lower[j] = i
    configs = tuple(sorted((lower[j], j, upper[j]) for j in upper))
    singles = tuple(sorted((lower[j], j) for j in rows[1] if j not in upper))
    n = num_vertices if num_vertices is not None else max(t.entries(), default=0)
    return MDiagram(n, configs, singles)


def circle_depth(m: MDiagram, position) -> int:
    """Number of arcs above a point on the line.

    ``position`` is either ``(vertex, "left" | "right")`` or a number giving the
    abscissa of a point just below the line of arcs.
    """
    if isinstance(position, tuple):
        v, side = position
        x = Fraction(2 * v - 1, 2) if side == "left" else Fraction(2 * v + 1, 2)
    else:
        x = Fraction(position)
    return sum(1 for a, b in m.arcs if a < x < b)


def circle_depth_at(m: MDiagram, x: Fraction, y2: Fraction) -> int:
    """Number of semicircles strictly above the point ``(x, y)`` given ``y**2``."""
    return sum(1 for a, b in m.arcs if (x - a) * (b - x) > y2)


def format_m_diagram(m: MDiagram) -> str:
    return f"n={m.num_vertices}; arcs=" + ",".join(f"{a}-{b}" for a, b in m.arcs)


def parse_m_diagram(text: str) -> MDiagram:
    try:
        head, arcs_part = text.split(";")
        n = int(head.split("=")[1])
        arcs = [tuple(int(x) for x in a.split("-")) for a in arcs_part.split("=")[1].split(",") if a.strip()]
    except (ValueError, IndexError) as exc:
        raise ValueError(f"malformed m-diagram {text!r}") from exc
    right_of = {a: b for a, b in arcs}
    left_of = {b: a for a, b in arcs}
    configs = sorted((left_of[j], j, right_of[j]) for j in right_of if j in left_of)
    in_config = {a for c in configs for a in ((c[0], c[1]), (c[1], c[2]))}
    singles = [a for a in sorted(arcs) if a not in in_config]
    return MDiagram(n, tuple(configs), tuple(singles))


# The two configurations are written as a standard tableau of shape (2,2,2) with
# their left ends in row 1, middles in row 2 and right ends in row 3. Labels are
# fixed so that I is the side-by-side case and IV, V are the two crossing cases.
RELATIVE_CASES = {
    ((1, 4), (2, 5), (3, 6)): "I",
    ((1, 2), (3, 5), (4, 6)): "II",
    ((1, 3), (2, 4), (5, 6)): "III",
    ((1, 3), (2, 5), (4, 6)): "IV",
    ((1, 2), (3, 4), (5, 6)): "V",
}


def relative_tableau(c1: Sequence[int], c2: Sequence[int]) -> Tableau:
    points = sorted(list(c1) + list(c2))
    if len(set(points)) != 6:
        raise ValueError("m-configurations share a vertex")
    rank = {v: i + 1 for i, v in enumerate(points)}
    rows = tuple(tuple(sorted((rank[c1[r]], rank[c2[r]]))) for r in range(3))
    return Tableau(rows)


def relative_position(c1: Sequence[int], c2: Sequence[int]) -> str:
    t = relative_tableau(c1, c2)
    try:
        return RELATIVE_CASES[t.rows]
    except KeyError:
        raise ValueError(f"configurations {tuple(c1)} and {tuple(c2)} are not in an m-diagram position") from None
