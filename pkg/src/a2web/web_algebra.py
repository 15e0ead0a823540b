"""Multiplication of webs by stacking and reduction to nonelliptic webs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .web_core import Web, WebError, assemble, canonical_form, is_tail, short_id, trivalize


class _Work:
    """Mutable web used during stacking and reduction.

    Darts keep their tail/head parity for life; ``mate`` is an explicit map so
    that splicing can join darts from different edges.
    """

    def __init__(self, top: str, bottom: str):
        self.top = top
        self.bottom = bottom
        self.top_v: list[int] = []
        self.bottom_v: list[int] = []
        self.rot: dict[int, list[int]] = {}
        self.vertex: dict[int, int] = {}
        self.mate: dict[int, int] = {}
        self.loops = 0
        self._next_v = 0
        self._next_d = 0

    def copy(self) -> "_Work":
        c = _Work(self.top, self.bottom)
        c.top_v, c.bottom_v = list(self.top_v), list(self.bottom_v)
        c.rot = {v: list(r) for v, r in self.rot.items()}
        c.vertex, c.mate = dict(self.vertex), dict(self.mate)
        c.loops, c._next_v, c._next_d = self.loops, self._next_v, self._next_d
        return c

    def add_web(self, w: Web) -> tuple[list[int], list[int]]:
        """Copy ``w`` in; return the new ids of its top and bottom boundary vertices."""
        vmap = [self._next_v + v for v in range(w.num_vertices)]
        self._next_v += w.num_vertices
        # keep parity: dart 2e -> even id, 2e+1 -> odd id
        base = self._next_d
        self._next_d += len(w.dart_vertex)
        for v, r in enumerate(w.rotation):
            self.rot[vmap[v]] = [base + d for d in r]
            for d in r:
                self.vertex[base + d] = vmap[v]
        for d in range(len(w.dart_vertex)):
            self.mate[base + d] = base + (d ^ 1)
        self.loops += w.loops
        return vmap[: w.k], vmap[w.k: w.k + w.m]

    def boundary(self) -> set[int]:
        return set(self.top_v) | set(self.bottom_v)

    def splice(self, port: dict[int, int], link: dict[int, int]) -> None:
        """Delete the vertices in ``port`` and reconnect their dangling ports.

        ``link`` pairs removed vertices; following port, link, port, ... from an
        outside dart ends at another outside dart, which becomes its mate. Cycles
        that never leave the removed set become free loops.
        """
        removed = set(port)
        done: set[int] = set()

        def walk(r: int) -> int | None:
            cur = r
            while True:
                done.add(cur)
                q = link[cur]
                done.add(q)
                o = self.mate[port[q]]
                if self.vertex[o] not in removed:
                    return o
                cur = self.vertex[o]
                if cur in done:
                    return None

        for r in sorted(port):
            if r in done:
                continue
            o1 = self.mate[port[r]]
            if self.vertex[o1] in removed:
                continue
            o2 = walk(r)
            if is_tail(o1) == is_tail(o2):
                raise WebError("splice would join two darts of the same direction")
            self.mate[o1], self.mate[o2] = o2, o1
        for r in sorted(port):
            if r not in done:
                walk(r)
                self.loops += 1
        for v in removed:
            for d in self.rot.pop(v):
                self.vertex.pop(d)
                self.mate.pop(d, None)

    # faces --------------------------------------------------------------

    def _cw(self, d: int) -> int:
        r = self.rot[self.vertex[d]]
        return r[r.index(d) - 1]

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for d in sorted(self.vertex):
            if d in seen:
                continue
            orb = []
            x = d
            while x not in seen:
                seen.add(x)
                orb.append(x)
                x = self._cw(self.mate[x])
            out.append(orb)
        return out

    def components(self) -> list[set[int]]:
        seen: set[int] = set()
        comps = []
        for v in sorted(self.rot):
            if v in seen:
                continue
            comp = set()
            stack = [v]
            while stack:
                u = stack.pop()
                if u in comp:
                    continue
                comp.add(u)
                stack.extend(self.vertex[self.mate[d]] for d in self.rot[u])
            seen |= comp
            comps.append(comp)
        return comps

    def reducible_faces(self) -> list[list[int]]:
        """Internal faces with 2 or 4 sides, assuming no closed components."""
        bnd = self.boundary()
        out = []
        for orb in self.orbits():
            if len(orb) in (2, 4) and not any(self.vertex[d] in bnd for d in orb):
                out.append(orb)
        return out

    def extract(self, comp: set[int]) -> "_Work":
        sub = _Work("", "")
        for v in comp:
            sub.rot[v] = self.rot.pop(v)
            for d in sub.rot[v]:
                sub.vertex[d] = self.vertex.pop(d)
                sub.mate[d] = self.mate.pop(d)
        return sub

    def apply(self, face: list[int]) -> list[tuple[int, "_Work"]]:
        """Apply the bigon or square rule to ``face``; returns weighted results."""
        verts = [self.vertex[d] for d in face]
        if len(set(verts)) != len(verts):
            raise WebError("face revisits a vertex")
        on_face = set(face) | {self.mate[d] for d in face}
        port = {}
        for v in verts:
            rest = [d for d in self.rot[v] if d not in on_face]
            if len(rest) != 1:
                raise WebError("face vertex is not trivalent")
            port[v] = rest[0]
        if len(face) == 2:
            u, v = verts
            w = self.copy()
            w.splice(port, {u: v, v: u})
            return [(2, w)]
        v1, v2, v3, v4 = verts
        out = []
        for link in ({v1: v2, v2: v1, v3: v4, v4: v3}, {v2: v3, v3: v2, v4: v1, v1: v4}):
            w = self.copy()
            w.splice(port, link)
            out.append((1, w))
        return out

    def to_web(self) -> Web:
        order = self.top_v + self.bottom_v + sorted(v for v in self.rot if v not in self.boundary())
        vid = {v: i for i, v in enumerate(order)}
        tails = sorted(d for d in self.vertex if is_tail(d))
        did = {}
        for e, d in enumerate(tails):
            did[d] = 2 * e
            did[self.mate[d]] = 2 * e + 1
        dart_vertex = [0] * (2 * len(tails))
        for d, nd in did.items():
            dart_vertex[nd] = vid[self.vertex[d]]
        rotation = tuple(tuple(did[d] for d in self.rot[v]) for v in order)
        return Web(self.top, self.bottom, tuple(dart_vertex), rotation, self.loops)


def _work_from_web(w: Web) -> _Work:
    work = _Work(w.top, w.bottom)
    work.top_v, work.bottom_v = work.add_web(w)
    return work


def stack(top: Web, bottom: Web) -> Web:
    """Place ``top`` above ``bottom`` and glue the matching boundary vertices."""
    if len(top.bottom) != len(bottom.top):
        raise WebError("boundary lengths differ")
    for a, b in zip(bottom.top, top.bottom):
        if a == b:
            raise WebError(f"boundary signs {bottom.top!r} and {top.bottom!r} cannot be glued")
    work = _Work(top.top, bottom.bottom)
    upper_top, upper_bottom = work.add_web(top)
    lower_top, lower_bottom = work.add_web(bottom)
    work.top_v, work.bottom_v = upper_top, lower_bottom
    port = {v: work.rot[v][0] for v in upper_bottom + lower_top}
    link = {}
    for a, b in zip(lower_top, upper_bottom):
        link[a], link[b] = b, a
    work.splice(port, link)
    return work.to_web()


def _closed_signature(work: _Work) -> str:
    w = work.to_web()
    return canonical_form(w)


_CLOSED_CACHE: dict[str, int] = {}


def evaluate_closed(work: _Work, rng: random.Random | None = None) -> int:
    """Scalar value of a closed web (no boundary) under the loop, bigon and square rules."""
    key = _closed_signature(work) if rng is None else None
    if key is not None and key in _CLOSED_CACHE:
        return _CLOSED_CACHE[key]
    total = 0
    stack_ = [(1, work)]
    while stack_:
        coef, w = stack_.pop()
        coef *= 3 ** w.loops
        w.loops = 0
        if not w.rot:
            total += coef
            continue
        faces = [f for f in w.orbits() if len(f) in (2, 4)]
        if not faces:
            raise WebError("closed web with no face of size 2 or 4")
        face = _choose(faces, rng)
        for c, nw in w.apply(face):
            stack_.append((coef * c, nw))
    if key is not None:
        _CLOSED_CACHE[key] = total
    return total


def _choose(faces: list[list[int]], rng: random.Random | None) -> list[int]:
    if rng is not None:
        return rng.choice(faces)
    return min(faces, key=lambda f: (len(f), min(f)))


class WebSum:
    """Integer combination of nonelliptic webs sharing a boundary."""

    def __init__(self, top: str, bottom: str, terms: dict[str, int] | None = None, webs: dict[str, Web] | None = None):
        self.top = top
        self.bottom = bottom
        self.terms = {key: c for key, c in (terms or {}).items() if c}
        self.webs = dict(webs or {})

    @classmethod
    def of(cls, w: Web, coef: int = 1) -> "WebSum":
        key = canonical_form(w)
        return cls(w.top, w.bottom, {key: coef}, {key: w})

    def _check(self, other: "WebSum") -> None:
        if (self.top, self.bottom) != (other.top, other.bottom):
            raise WebError("web sums have different boundaries")

    def __add__(self, other: "WebSum") -> "WebSum":
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return WebSum(self.top, self.bottom, terms, {**self.webs, **other.webs})

    def __neg__(self) -> "WebSum":
        return WebSum(self.top, self.bottom, {key: -c for key, c in self.terms.items()}, self.webs)

    def __sub__(self, other: "WebSum") -> "WebSum":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "WebSum":
        return WebSum(self.top, self.bottom, {key: scalar * c for key, c in self.terms.items()}, self.webs)

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WebSum):
            return NotImplemented
        return (self.top, self.bottom, self.terms) == (other.top, other.bottom, other.terms)

    def __hash__(self):
        return hash((self.top, self.bottom, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[int, Web]]:
        return [(self.terms[key], self.webs[key]) for key in sorted(self.terms)]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*<web#{short_id(w)}>" for c, w in self.items())


def reduce(w: Web, rng: random.Random | None = None) -> WebSum:
    """Reduce a web to an integer combination of nonelliptic webs.

    Free loops give a factor 3, a bigon a factor 2 and a square splits into its two
    smoothings. Without ``rng`` the smallest face with the smallest dart id is used;
    with ``rng`` faces are picked at random.
    """
    out: dict[str, int] = {}
    webs: dict[str, Web] = {}
    todo = [(1, _work_from_web(w))]
    while todo:
        coef, work = todo.pop()
        bnd = work.boundary()
        for comp in work.components():
            if not comp & bnd:
                coef *= evaluate_closed(work.extract(comp), rng)
        coef *= 3 ** work.loops
        work.loops = 0
        if coef == 0:
            continue
        faces = work.reducible_faces()
        if not faces:
            result = work.to_web()
            key = canonical_form(result)
            out[key] = out.get(key, 0) + coef
            webs[key] = result
            continue
        face = _choose(faces, rng)
        for c, nw in work.apply(face):
            todo.append((coef * c, nw))
    return WebSum(w.top, w.bottom, out, webs)


def multiply(a: WebSum, b: WebSum, rng: random.Random | None = None) -> WebSum:
    """Product ``a * b`` with ``a`` stacked above ``b``."""
    if a.bottom != "".join("+" if c == "-" else "-" for c in b.top):
        raise WebError("web sums cannot be multiplied: boundary mismatch")
    total = WebSum(a.top, b.bottom)
    for ca, wa in a.items():
        for cb, wb in b.items():
            total = total + (ca * cb) * reduce(stack(wa, wb), rng)
    return total


def generator_f(i: int, k: int) -> Web:
    """Identity strands with one H joining positions ``i`` and ``i+1``."""
    if not 1 <= i < k:
        raise WebError(f"f_{i} is not defined for k={k}")
    strands = [(p, p) for p in range(1, k + 1)]
    strands[i - 1], strands[i] = (i, i + 1), (i + 1, i)
    return trivalize(assemble(k, k, strands=strands))


def identity(k: int) -> Web:
    return trivalize(assemble(k, k, strands=[(p, p) for p in range(1, k + 1)]))


def f(i: int, k: int) -> WebSum:
    return WebSum.of(generator_f(i, k))


def generator_g(i: int, k: int) -> WebSum:
    if not 1 <= i <= k - 2:
        raise WebError(f"g_{i} is not defined for k={k}")
    return f(i, k) * f(i + 1, k) * f(i, k) - f(i, k)


def word_product(word: Sequence[str], k: int, rng: random.Random | None = None) -> WebSum:
    """Product of generators named like ``"f1"`` or ``"g2"``, left to right."""
    result = WebSum.of(identity(k))
    for name in word:
        kind, idx = name[0], int(name[1:])
        factor = f(idx, k) if kind == "f" else generator_g(idx, k) if kind == "g" else None
        if factor is None:
            raise WebError(f"unknown generator {name!r}")
        result = multiply(result, factor, rng)
    return result


@dataclass(frozen=True)
class RelationCheck:
    name: str
    instance: str
    passed: bool


def verify_relations(k: int) -> list[RelationCheck]:
    """Check every instance of the defining and derived relations in ``Z_k``."""
    fs = {i: f(i, k) for i in range(1, k)}
    gs = {i: generator_g(i, k) for i in range(1, k - 1)}
    out: list[RelationCheck] = []

    def check(name, instance, lhs, rhs):
        out.append(RelationCheck(name, instance, lhs == rhs))

    for i in fs:
        check("R1", f"f{i}^2 = 2 f{i}", fs[i] * fs[i], 2 * fs[i])
    for i in fs:
        for j in fs:
            if j > i + 1:
                check("R2", f"f{i} f{j} = f{j} f{i}", fs[i] * fs[j], fs[j] * fs[i])
    for i in range(1, k - 1):
        lhs = fs[i] * fs[i + 1] * fs[i] - fs[i]
        rhs = fs[i + 1] * fs[i] * fs[i + 1] - fs[i + 1]
        check("R3", f"f{i} f{i+1} f{i} - f{i} = f{i+1} f{i} f{i+1} - f{i+1}", lhs, rhs)
        single = len(gs[i].terms) == 1 and list(gs[i].terms.values()) == [1]
        out.append(RelationCheck("R3", f"f{i} f{i+1} f{i} = g{i} + f{i} with g{i} a single web", single))
    for i in range(1, k - 2):
        check("R4", f"g{i} g{i+1} g{i} - 4 g{i} = 0", gs[i] * gs[i + 1] * gs[i], 4 * gs[i])
    for i in fs:
        for j in gs:
            check("Ra", f"f{i} g{j} = g{j} f{i}", fs[i] * gs[j], gs[j] * fs[i])
    for j in gs:
        check("Rb", f"g{j}^2 = 6 g{j}", gs[j] * gs[j], 6 * gs[j])
    for j in gs:
        if j + 2 in gs:
            check("Rc", f"g{j} g{j+2} g{j} = -2 g{j}", gs[j] * gs[j + 2] * gs[j], -2 * gs[j])
            check("Rc", f"g{j+2} g{j} g{j+2} = -2 g{j+2}", gs[j + 2] * gs[j] * gs[j + 2], -2 * gs[j + 2])
    for i in gs:
        check("Rd", f"f{i} g{i} = -2 g{i}", fs[i] * gs[i], -2 * gs[i])
        check("Rd", f"f{i+1} g{i} = -2 g{i}", fs[i + 1] * gs[i], -2 * gs[i])
    return out


def closure(k: int) -> set[str]:
    """Canonical forms of all basis webs appearing in products of the ``f_i``.

    The empty product (the identity web) is included.
    """
    gens = [generator_f(i, k) for i in range(1, k)]
    start = identity(k)
    seen = {canonical_form(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                for _, u in reduce(stack(w, g)).items():
                    key = canonical_form(u)
                    if key not in seen:
                        seen[key] = u
                        nxt.append(u)
        frontier = nxt
    return set(seen)
