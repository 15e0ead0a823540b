"""Robinson-Schensted correspondence and permutation diagrams of 321-avoiding permutations."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import kernels
from .tableaux import Tableau, TableauError
from .web_core import FaceStructure, PreDiagram, Trivalized, assemble, faces, trivalize_with_provenance

Permutation = tuple[int, ...]


class PermutationError(ValueError):
    pass


def check_permutation(sigma: Sequence[int]) -> Permutation:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise PermutationError(f"not a permutation of 1..{len(sigma)}: {list(sigma)}")
    return sigma


def format_permutation(sigma: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in sigma) + "]"


def parse_permutation(text: str) -> Permutation:
    body = text.strip().strip("[]")
    try:
        values = [int(v) for v in body.split(",") if v.strip()]
    except ValueError as exc:
        raise PermutationError(f"bad permutation {text!r}") from exc
    return check_permutation(values)


def rs(sigma: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Return ``(R, Q)``: ``R`` records new boxes, ``Q`` is the insertion tableau."""
    sigma = check_permutation(sigma)
    rec, ins = kernels.rs_insert(list(sigma))
    return Tableau.from_rows(rec), Tableau.from_rows(ins)


def rs_inverse(r: Tableau, q: Tableau) -> Permutation:
    if r.shape != q.shape:
        raise TableauError(f"shape mismatch: {r.shape} vs {q.shape}")
    if not (r.is_standard() and q.is_standard()):
        raise TableauError("rs_inverse expects standard tableaux")
    ins = [list(row) for row in q.rows]
    where = {v: i for i, row in enumerate(r.rows) for v in row}
    out = [0] * len(r)
    for step in range(len(r), 0, -1):
        i = where[step]
        x = ins[i].pop()
        for j in range(i - 1, -1, -1):
            row = ins[j]
            pos = max(p for p, y in enumerate(row) if y < x)
            row[pos], x = x, row[pos]
        out[step - 1] = x
        if not ins[i]:
            ins.pop(i)
    return tuple(out)


def is_321_avoiding(sigma: Sequence[int]) -> bool:
    """True iff ``sigma`` has no decreasing subsequence of length 3."""
    # a middle element is bad when something larger precedes and something smaller follows
    n = len(sigma)
    best = 0
    larger_before = [False] * n
    for i, v in enumerate(sigma):
        larger_before[i] = best > v
        best = max(best, v)
    low = n + 1
    for i in range(n - 1, -1, -1):
        v = sigma[i]
        if larger_before[i] and low < v:
            return False
        low = min(low, v)
    return True


def brute_321_avoiding(sigma: Sequence[int]) -> bool:
    return not any(sigma[a] > sigma[b] > sigma[c] for a, b, c in combinations(range(len(sigma)), 3))


@dataclass(frozen=True)
class PermDiagram:
    """Wiring diagram of ``perm`` with strand ``i`` from ``t_i`` to ``b_perm(i)``.

    Crossings are stored as trivalized H pieces, so crossing the middle edge of a
    piece is the single horizontal step through an intersection.
    """

    perm: Permutation
    pre: PreDiagram
    triv: Trivalized
    faces: FaceStructure

    @property
    def depth(self) -> tuple[int, ...]:
        return self.faces.depth

    @property
    def delta_top(self) -> tuple[int, ...]:
        return self.faces.delta_top

    @property
    def delta_bot(self) -> tuple[int, ...]:
        return self.faces.delta_bottom

    def segment_label(self, curve: int, index: int) -> int:
        """Absolute depth difference across segment ``index`` of strand ``curve``."""
        return self._labels[(curve, index)]

    @property
    def _labels(self) -> dict[tuple[int, int], int]:
        cache = self.__dict__.get("_label_cache")
        if cache is None:
            fs = self.faces
            cache = {}
            for e, p in enumerate(self.triv.provenance):
                if p[0] == "seg":
                    a, b = fs.face_of[2 * e], fs.face_of[2 * e + 1]
                    cache[(p[1], p[2])] = abs(fs.depth[a] - fs.depth[b])
            object.__setattr__(self, "_label_cache", cache)
        return cache


def diagram(sigma: Sequence[int]) -> PermDiagram:
    sigma = check_permutation(sigma)
    if not is_321_avoiding(sigma):
        raise PermutationError(f"{format_permutation(sigma)} contains the pattern 321")
    ell = len(sigma)
    pre = assemble(ell, ell, strands=[(i + 1, v) for i, v in enumerate(sigma)])
    triv = trivalize_with_provenance(pre)
    return PermDiagram(sigma, pre, triv, faces(triv.web))


def _rows_from_delta(delta: Sequence[int], values: dict[int, int]) -> Tableau:
    rows: list[list[int]] = [[], [], []]
    for i, d in enumerate(delta, start=1):
        if d not in values:
            raise PermutationError(f"depth difference {d} out of range")
        rows[values[d]].append(i)
    return Tableau(tuple(tuple(r) for r in rows))


def psi(sigma: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Tableaux read from boundary depth differences: 1 means row 1, 0 means row 2."""
    d = diagram(sigma)
    rows = {1: 0, 0: 1}
    return _rows_from_delta(d.delta_top, rows), _rows_from_delta(d.delta_bot, rows)


# ends of a crossing are stored counterclockwise as
# [up-right, up-left, down-left, down-right]
_TURN = {0: 1, 1: 0, 2: 3, 3: 2}


def trip(sigma: Sequence[int], start: tuple[str, int], d: PermDiagram | None = None) -> tuple[tuple[str, int], int]:
    """Walk from a boundary vertex, turning at every crossing.

    At a crossing the walk leaves along the neighbouring end on the same side
    (top or bottom) of the crossing; along the way the depth difference across
    consecutive segments alternates between 0 and 1. Returns the terminal vertex
    and the number of turns.
    """
    if d is None:
        d = diagram(sigma)
    pre = d.pre
    side, i = start
    if side == "t":
        c = i - 1
        idx, down = len(pre.curves[c].crossings), True
    else:
        c = next(p for p, cv in enumerate(pre.curves) if cv.start == ("b", i))
        idx, down = 0, False
    turns = 0
    while True:
        cross = pre.curves[c].crossings
        if down and idx == 0:
            return pre.curves[c].start, turns
        if not down and idx == len(cross):
            return pre.curves[c].end, turns
        x = cross[idx - 1] if down else cross[idx]
        ends = pre.crossings[x]
        a = ends.index((c, "out" if down else "in"))
        b = _TURN[a]
        label_in = d.segment_label(c, idx)
        c, end_side = ends[b]
        j = pre.curves[c].crossings.index(x)
        idx, down = (j + 1, False) if end_side == "out" else (j, True)
        if d.segment_label(c, idx) == label_in:
            raise AssertionError("depth differences failed to alternate along a trip")
        turns += 1


Matching = tuple[tuple[tuple[str, int], tuple[str, int]], ...]


def _vertex_key(v: tuple[str, int]) -> tuple[int, int]:
    return (0 if v[0] == "t" else 1, v[1])


def temperley_lieb(sigma: Sequence[int]) -> Matching:
    """Noncrossing matching joining the two ends of every trip."""
    d = diagram(sigma)
    ell = len(d.perm)
    pairs = set()
    for v in [("t", i) for i in range(1, ell + 1)] + [("b", i) for i in range(1, ell + 1)]:
        end, _ = trip(sigma, v, d)
        pairs.add(tuple(sorted((v, end), key=_vertex_key)))
    return tuple(sorted(pairs, key=lambda p: (_vertex_key(p[0]), _vertex_key(p[1]))))


def format_matching(m: Matching) -> str:
    return ",".join(f"{a[0]}{a[1]}-{b[0]}{b[1]}" for a, b in m)


def is_noncrossing_matching(m: Matching, ell: int) -> bool:
    """Check a perfect noncrossing matching on ``t1..t_ell`` and ``b1..b_ell``.

    Vertices are placed on a circle: top left to right, then bottom right to left.
    """

    def pos(v):
        return v[1] if v[0] == "t" else 2 * ell + 1 - v[1]

    seen = [pos(v) for p in m for v in p]
    if sorted(seen) != list(range(1, 2 * ell + 1)):
        return False
    chords = [tuple(sorted(map(pos, p))) for p in m]
    for (a, b), (c, e) in combinations(chords, 2):
        if a < c < b < e or c < a < e < b:
            return False
    return True
