"""Reference implementations used only by the tests.

Each one computes its answer by a route that shares no code with the package:
brute force over fillings or matchings, matrices on the tensor cube of C^3, and
plane geometry via shapely.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from functools import lru_cache

import numpy as np


# -- tableaux ---------------------------------------------------------------


def ssyt_brute(shape, type_):
    """All semistandard fillings of ``shape`` with multiset ``type_``, by permuting values."""
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    out = set()
    for perm in set(itertools.permutations(sorted(type_))):
        grid = dict(zip(cells, perm))
        ok = all(
            (j == 0 or grid[(i, j - 1)] <= v) and (i == 0 or grid[(i - 1, j)] < v)
            for (i, j), v in grid.items()
        )
        if ok:
            out.add(tuple(tuple(grid[(i, j)] for j in range(r)) for i, r in enumerate(shape)))
    return sorted(out)


@lru_cache(maxsize=None)
def syt_count(shape: tuple[int, ...]) -> int:
    """Standard tableaux counted by removing the largest entry from a corner."""
    shape = tuple(p for p in shape if p)
    if sum(shape) <= 1:
        return 1
    total = 0
    for i, p in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < p:
            smaller = list(shape)
            smaller[i] -= 1
            total += syt_count(tuple(smaller))
    return total


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


# -- Robinson-Schensted -----------------------------------------------------


def rs_oracle(sigma):
    """Row insertion written with bisect-free scans; returns (recording, insertion)."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(sigma, start=1):
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            bigger = [y for y in P[r] if y > x]
            if not bigger:
                P[r].append(x)
                Q[r].append(step)
                break
            y = min(bigger)
            P[r][P[r].index(y)] = x
            x = y
            r += 1
    return tuple(map(tuple, Q)), tuple(map(tuple, P))


# -- matchings --------------------------------------------------------------


def all_perfect_matchings(points):
    if not points:
        yield ()
        return
    a = points[0]
    for i in range(1, len(points)):
        rest = points[1:i] + points[i + 1:]
        for m in all_perfect_matchings(rest):
            yield ((a, points[i]),) + m


def noncrossing_count(n_points: int) -> int:
    count = 0
    for m in all_perfect_matchings(tuple(range(n_points))):
        if not any(a < c < b < d or c < a < d < b for (a, b), (c, d) in itertools.combinations(m, 2)):
            count += 1
    return count


# -- centralizer algebra on (C^3)^{tensor k} ---------------------------------


def swap_matrix(k: int, i: int) -> np.ndarray:
    d = 3 ** k
    M = np.zeros((d, d), dtype=np.int64)
    for idx in itertools.product(range(3), repeat=k):
        j = list(idx)
        j[i - 1], j[i] = j[i], j[i - 1]
        M[np.ravel_multi_index(j, (3,) * k), np.ravel_multi_index(idx, (3,) * k)] = 1
    return M


def tensor_generators(k: int):
    """``f_i = 1 - s_i`` and ``g_i = f_i f_{i+1} f_i - f_i`` as integer matrices."""
    I = np.eye(3 ** k, dtype=np.int64)
    f = {i: I - swap_matrix(k, i) for i in range(1, k)}
    g = {i: f[i] @ f[i + 1] @ f[i] - f[i] for i in range(1, k - 1)}
    return I, f, g


def tensor_relations(k: int) -> dict[str, bool]:
    """Truth value of each relation instance, keyed like ``verify_relations``."""
    _, f, g = tensor_generators(k)
    eq = np.array_equal
    out = {}
    for i in f:
        out[f"f{i}^2 = 2 f{i}"] = eq(f[i] @ f[i], 2 * f[i])
    for i in f:
        for j in f:
            if j > i + 1:
                out[f"f{i} f{j} = f{j} f{i}"] = eq(f[i] @ f[j], f[j] @ f[i])
    for i in range(1, k - 1):
        out[f"f{i} f{i+1} f{i} - f{i} = f{i+1} f{i} f{i+1} - f{i+1}"] = eq(g[i], f[i + 1] @ f[i] @ f[i + 1] - f[i + 1])
    for i in range(1, k - 2):
        out[f"g{i} g{i+1} g{i} - 4 g{i} = 0"] = eq(g[i] @ g[i + 1] @ g[i], 4 * g[i])
    for i in f:
        for j in g:
            out[f"f{i} g{j} = g{j} f{i}"] = eq(f[i] @ g[j], g[j] @ f[i])
    for j in g:
        out[f"g{j}^2 = 6 g{j}"] = eq(g[j] @ g[j], 6 * g[j])
    for j in g:
        if j + 2 in g:
            out[f"g{j} g{j+2} g{j} = -2 g{j}"] = eq(g[j] @ g[j + 2] @ g[j], -2 * g[j])
            out[f"g{j+2} g{j} g{j+2} = -2 g{j+2}"] = eq(g[j + 2] @ g[j] @ g[j + 2], -2 * g[j + 2])
    for i in g:
        out[f"f{i} g{i} = -2 g{i}"] = eq(f[i] @ g[i], -2 * g[i])
        out[f"f{i+1} g{i} = -2 g{i}"] = eq(f[i + 1] @ g[i], -2 * g[i])
    return out


def tensor_matrix(word, k: int) -> np.ndarray:
    I, f, g = tensor_generators(k)
    M = I
    for name in word:
        M = M @ (f if name[0] == "f" else g)[int(name[1:])]
    return M


def algebra_dimension(k: int) -> int:
    """Dimension of the algebra generated by the ``f_i``, grown by right multiplication."""
    I, f, _ = tensor_generators(k)
    basis: list[np.ndarray] = []

    def add(M) -> bool:
        v = M.ravel().astype(float)
        for b in basis:
            v = v - (b @ v) * b
        norm = np.linalg.norm(v)
        if norm < 1e-6:
            return False
        basis.append(v / norm)
        return True

    add(I)
    frontier = [I]
    while frontier:
        nxt = []
        for M in frontier:
            for F in f.values():
                P = M @ F
                if add(P):
                    nxt.append(P)
        frontier = nxt
    return len(basis)


# -- straight-line permutation diagrams ---------------------------------------


def straight_line_deltas(sigma):
    """Boundary depth differences of the straight-line drawing of ``sigma``.

    Faces come from shapely's polygonizer. Faces sharing a segment are one step
    apart, and so are the faces left and right of a crossing point.
    """
    from shapely.geometry import LineString, Point, box
    from shapely.ops import polygonize, unary_union

    ell = len(sigma)
    lines = [LineString([(i, 1.0), (s, 0.0)]) for i, s in enumerate(sigma, start=1)]
    frame = box(0.0, 0.0, ell + 1.0, 1.0)
    polys = list(polygonize(unary_union(lines + [frame.boundary])))

    def face_at(x, y):
        p = Point(x, y)
        for idx, poly in enumerate(polys):
            if poly.contains(p):
                return idx
        raise AssertionError(f"no face at {(x, y)}")

    adj = {i: set() for i in range(len(polys))}
    for a, b in itertools.combinations(range(len(polys)), 2):
        if polys[a].boundary.intersection(polys[b].boundary).length > 1e-9:
            adj[a].add(b)
            adj[b].add(a)
    eps = 1e-4
    for l1, l2 in itertools.combinations(lines, 2):
        x = l1.intersection(l2)
        if x.geom_type == "Point" and 0 < x.y < 1:
            a, b = face_at(x.x - eps, x.y), face_at(x.x + eps, x.y)
            adj[a].add(b)
            adj[b].add(a)
    root = face_at(0.5, 0.5)
    depth = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in depth:
                depth[v] = depth[u] + 1
                queue.append(v)
    dx, dy = 1e-3, 1e-7
    top = tuple(depth[face_at(i + dx, 1 - dy)] - depth[face_at(i - dx, 1 - dy)] for i in range(1, ell + 1))
    bot = tuple(depth[face_at(i + dx, dy)] - depth[face_at(i - dx, dy)] for i in range(1, ell + 1))
    return top, bot


# -- semicircle depth for m-diagrams -------------------------------------------


def semicircle_depth(arcs, x, y) -> int:
    """Number of semicircles on the baseline that strictly contain ``(x, y)``."""
    count = 0
    for a, b in arcs:
        c, r = (a + b) / 2, (b - a) / 2
        if (x - c) ** 2 + y ** 2 < r ** 2:
            count += 1
    return count


def content_of(rows) -> Counter:
    return Counter(v for r in rows for v in r)


def noncrossing_count_pruned(n_points: int) -> int:
    """Count perfect matchings chord by chord, abandoning a branch at its first crossing."""

    def go(free, chords):
        if not free:
            return 1
        a, rest = free[0], free[1:]
        total = 0
        for i, b in enumerate(rest):
            if any(a < c < b < d or c < a < d < b for c, d in chords):
                continue
            total += go(rest[:i] + rest[i + 1:], chords + [(a, b)])
        return total

    return go(tuple(range(n_points)), [])


def perms_avoiding_321(ell: int):
    """Grow sequences left to right, refusing a value below any earlier inversion's smaller end."""
    out = []

    def go(prefix, used, best, floor):
        if len(prefix) == ell:
            out.append(tuple(prefix))
            return
        for v in range(1, ell + 1):
            if used[v] or v < floor:
                continue
            used[v] = True
            prefix.append(v)
            # a later value below v would complete a 321 if something above v came first
            go(prefix, used, max(best, v), max(floor, v) if best > v else floor)
            prefix.pop()
            used[v] = False

    go([], [False] * (ell + 1), 0, 0)
    return out
