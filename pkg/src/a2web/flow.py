"""Flow diagrams on a triangular grid built from a pair of standard tableaux.

The big triangle of side ``N`` points down. Top edge ``i`` (1-based) sits above
the unit triangle ``i``; from it two grid lines run down to the sides: a
down-right line ``R_i`` and a down-left line ``L_i``. Lines ``R_i`` and ``L_j``
(``i < j``) meet in the rhombus ``X(i, j)``, and these rhombi tile the rest of
the triangle.

Edges are keyed as ``("t", i)`` for top edges, ``("r", i, j)`` for the piece of
``R_i`` entering ``X(i, j)`` from above (``j = N + 1`` is the right side),
``("l", i, j)`` for the piece of ``L_j`` entering ``X(i, j)`` from above
(``i = 0`` is the left side) and ``("m", i, j)`` for the middle edge of
``X(i, j)``. Labels are flows in ``Z/3`` read in the downward direction, stored
in ``{1, 2}``; reversing an edge turns ``q`` into ``3 - q`` and labels ``0``
and ``3`` are not stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tableaux import Tableau, TableauError, TableauPairPlusMinus


class FlowError(ValueError):
    pass


# ---------------------------------------------------------------------------
# one-column tableaux and words


@dataclass(frozen=True)
class Column:
    entries: tuple[int, ...]  # top to bottom
    height: int
    index: int


def columns(t: Tableau) -> list[Column]:
    """Split a standard tableau with at most 3 rows into one-column tableaux.

    Each third-row entry takes the largest free smaller second-row entry; then
    every second-row entry takes the largest free smaller first-row entry.
    """
    if t.is_skew or len(t.rows) > 3:
        raise TableauError("columns expects a straight shape with at most 3 rows")
    rows = list(t.rows) + [()] * (3 - len(t.rows))
    below: dict[int, int] = {}
    used: set[int] = set()
    for ell in rows[2]:
        j = max((v for v in rows[1] if v < ell and v not in used), default=None)
        if j is None:
            raise TableauError(f"no second-row partner for {ell}")
        used.add(j)
        below[j] = ell
    above: dict[int, int] = {}
    used = set()
    for j in rows[1]:
        i = max((v for v in rows[0] if v < j and v not in used), default=None)
        if i is None:
            raise TableauError(f"no first-row partner for {j}")
        used.add(i)
        above[j] = i
    cols = []
    for j, i in above.items():
        cols.append((i, j, below[j]) if j in below else (i, j))
    cols += [(i,) for i in rows[0] if i not in used]
    out = []
    for h in (3, 2, 1):
        group = sorted((c for c in cols if len(c) == h), key=lambda c: c[-1])
        out += [Column(c, h, idx) for idx, c in enumerate(group, start=1)]
    return out


@dataclass(frozen=True)
class FlowWord:
    """Symbols in ``{-3..3}`` with ``0`` for a blank.

    Words built from tableaux have minus symbols before the wall (after ``wall``
    symbols) and plus symbols after it; a general word has ``wall=None``.
    """

    symbols: tuple[int, ...]
    wall: int | None = None

    def __post_init__(self):
        if any(abs(s) > 3 for s in self.symbols):
            raise FlowError("symbols must lie in -3..3")
        if self.wall is None:
            return
        for pos, s in enumerate(self.symbols, start=1):
            if s and (s < 0) != (pos <= self.wall):
                raise FlowError(f"symbol {s} at position {pos} is on the wrong side of the wall")

    def __str__(self) -> str:
        return format_word(self)


def format_word(w: FlowWord) -> str:
    parts = ["|"] if w.wall == 0 else []
    for pos, s in enumerate(w.symbols, start=1):
        parts.append("." if s == 0 else str(s))
        if w.wall is not None and pos == w.wall:
            parts.append("|")
    return " ".join(parts)


def parse_word(text: str) -> FlowWord:
    symbols, wall = [], None
    for tok in text.split():
        if tok == "|":
            wall = len(symbols)
        elif tok == ".":
            symbols.append(0)
        else:
            symbols.append(int(tok))
    return FlowWord(tuple(symbols), wall)


def word_of_column(c: Column | None, side: str, n: int, k: int) -> FlowWord:
    """Place a column's entries in a word of length ``3n - k``.

    Minus-side entry ``i`` in row ``r`` becomes ``-r`` at position ``i``; plus-side
    entry ``i`` becomes ``r`` at position ``3n - k - i + 1``.
    """
    length = 3 * n - k
    symbols = [0] * length
    if c is not None:
        for r, i in enumerate(c.entries, start=1):
            pos = i if side == "minus" else length - i + 1
            if not 1 <= pos <= length or symbols[pos - 1]:
                raise FlowError(f"position {pos} collides or is out of range")
            symbols[pos - 1] = -r if side == "minus" else r
    return FlowWord(tuple(symbols), 3 * n - 2 * k)


def superimpose(words: list[FlowWord]) -> FlowWord:
    if not words:
        raise FlowError("nothing to superimpose")
    out = [0] * len(words[0].symbols)
    for w in words:
        for pos, s in enumerate(w.symbols):
            if s:
                if out[pos]:
                    raise FlowError(f"two columns use position {pos + 1}")
                out[pos] = s
    return FlowWord(tuple(out), words[0].wall)


# ---------------------------------------------------------------------------
# labelled triangle


def down_label(symbol: int) -> int:
    """Downward flow through a top edge: minus symbols flow in, plus symbols out."""
    return (-symbol) % 3


@dataclass(frozen=True)
class LabeledTriangle:
    side: int
    word: FlowWord
    edge_labels: dict = field(hash=False)
    caps: tuple[tuple[int, int], ...] = ()

    def label(self, key) -> int:
        return self.edge_labels.get(key, 0)


def _cap_edges(p: int, q: int, x: int, n: int) -> dict:
    """Edges of the cap from top edge ``p`` down ``R_p`` to ``X(p, q)`` and up ``L_q``."""
    edges = {("t", p): x, ("t", q): 3 - x}
    for j in range(p + 1, q + 1):
        edges[("r", p, j)] = x
    for i in range(p, q):
        edges[("l", i, q)] = 3 - x
    return edges


def flow_from_caps(word: FlowWord, caps: list[tuple[int, int]]) -> LabeledTriangle:
    n = len(word.symbols)
    labels: dict = {}
    for p, q in caps:
        x = down_label(word.symbols[p - 1])
        if down_label(word.symbols[q - 1]) != 3 - x:
            raise FlowError(f"cap {p}-{q} does not conserve flow")
        for key, val in _cap_edges(p, q, x, n).items():
            if key in labels:
                raise FlowError(f"two strands share edge {key}")
            labels[key] = val
    # rhombi where two strands cross get a middle edge
    for (p, q) in caps:
        for (p2, q2) in caps:
            if p < p2 < q < q2:
                s, t = labels[("r", p2, q)], labels[("l", p2, q)]
                if s == t:
                    raise FlowError(f"strands crossing at X({p2},{q}) carry the same label")
                mid = (s + t) % 3
                if mid:
                    labels[("m", p2, q)] = mid
    return LabeledTriangle(n, word, labels, tuple(sorted(caps)))


def flow_from_word(word: FlowWord) -> LabeledTriangle:
    """Flow diagram of an arbitrary word.

    Strand ends are matched like brackets: an end closes the nearest open end
    whose downward label adds up with its own to 3. Ends left open run straight
    down the line ``R_p`` to the right side of the triangle.
    """
    n = len(word.symbols)
    stack: list[int] = []
    caps = []
    for pos, s in enumerate(word.symbols, start=1):
        x = down_label(s)
        if not x:
            continue
        if stack and down_label(word.symbols[stack[-1] - 1]) + x == 3:
            caps.append((stack.pop(), pos))
        else:
            stack.append(pos)
    d = flow_from_caps(word, caps)
    labels = dict(d.edge_labels)
    for p in stack:
        x = down_label(word.symbols[p - 1])
        labels[("t", p)] = x
        for j in range(p + 1, n + 2):
            if ("r", p, j) in labels:
                raise FlowError(f"open strand from {p} runs into another strand")
            labels[("r", p, j)] = x
        for q in range(p + 1, n + 1):
            if ("l", p, q) in labels:
                # crossing an ascending strand
                s, t = x, labels[("l", p, q)]
                if (s + t) % 3:
                    labels[("m", p, q)] = (s + t) % 3
    return LabeledTriangle(n, word, labels, d.caps)


def caps_of_pair(pair: TableauPairPlusMinus) -> tuple[FlowWord, list[tuple[int, int]], list[FlowWord]]:
    """Words of all columns, their superposition, and the caps they contribute."""
    n, k = pair.n, pair.k
    minus = columns(pair.t_minus)
    plus = columns(pair.t_plus)
    length = 3 * n - k
    words: list[FlowWord] = []
    caps: list[tuple[int, int]] = []

    def pos_plus(i: int) -> int:
        return length - i + 1

    for c in minus:
        if c.height == 3:
            words.append(word_of_column(c, "minus", n, k))
            caps.append((c.entries[0], c.entries[1]))
    for c in plus:
        if c.height == 3:
            words.append(word_of_column(c, "plus", n, k))
            caps.append((pos_plus(c.entries[1]), pos_plus(c.entries[0])))
    for h in (2, 1):
        ms = [c for c in minus if c.height == h]
        ps = [c for c in plus if c.height == h]
        if len(ms) != len(ps):
            raise FlowError(f"unequal numbers of height-{h} columns")
        for cm, cp in zip(ms, ps):
            words.append(superimpose([word_of_column(cm, "minus", n, k), word_of_column(cp, "plus", n, k)]))
            if h == 1:
                caps.append((cm.entries[0], pos_plus(cp.entries[0])))
            else:
                # -1 -2 on the minus side and 2 1 on the plus side each close up
                caps.append((cm.entries[0], cm.entries[1]))
                caps.append((pos_plus(cp.entries[1]), pos_plus(cp.entries[0])))
    if not words:
        words.append(word_of_column(None, "minus", n, k))
    return superimpose(words), caps, words


def flow_from_pair(pair: TableauPairPlusMinus) -> LabeledTriangle:
    word, caps, _ = caps_of_pair(pair)
    return flow_from_caps(word, caps)


def pair_from_flow(d: LabeledTriangle, n: int, k: int) -> TableauPairPlusMinus:
    """Recover ``(T+, T-)`` from the symbols on the top boundary."""
    w = d.word
    length = 3 * n - k
    if len(w.symbols) != length or w.wall != 3 * n - 2 * k:
        raise FlowError("word length or wall does not match (n, k)")
    for pos, s in enumerate(w.symbols, start=1):
        if s == 0 or abs(s) > 3:
            raise FlowError(f"unreadable symbol at position {pos}")
        if d.label(("t", pos)) != down_label(s):
            raise FlowError(f"top edge {pos} disagrees with its symbol")
    minus: list[list[int]] = [[], [], []]
    plus: list[list[int]] = [[], [], []]
    for pos, s in enumerate(w.symbols, start=1):
        if s < 0:
            minus[-s - 1].append(pos)
        else:
            plus[s - 1].append(length - pos + 1)
    t_minus = Tableau(tuple(tuple(sorted(r)) for r in minus))
    t_plus = Tableau(tuple(tuple(sorted(r)) for r in plus))
    return TableauPairPlusMinus(t_plus, t_minus, n, k)


def is_admissible(d: LabeledTriangle) -> bool:
    """No labelled edge on the two lower sides of the triangle."""
    n = d.side
    for key, val in d.edge_labels.items():
        if val % 3 == 0:
            continue
        if key[0] == "r" and key[2] == n + 1:
            return False
        if key[0] == "l" and key[1] == 0:
            return False
    return True


def _rhombus(d: LabeledTriangle, i: int, j: int) -> tuple[int, int, int, int, int]:
    n = d.side
    tl = d.label(("r", i, j))
    tr = d.label(("l", i, j))
    br = d.label(("r", i, j + 1)) if j < n else d.label(("r", i, n + 1))
    bl = d.label(("l", i - 1, j)) if i > 1 else d.label(("l", 0, j))
    mid = d.label(("m", i, j))
    return tl, tr, bl, br, mid


def rhombus_kind(tl: int, tr: int, bl: int, br: int, mid: int) -> str | None:
    """Classify a rhombus by its downward labels; ``None`` if not a legal template."""
    if not (tl or tr or bl or br or mid):
        return "empty"
    if tl and not tr and br == tl and not bl and not mid:
        return "pass-right"
    if tr and not tl and bl == tr and not br and not mid:
        return "pass-left"
    if tl and tr and tl + tr == 3 and not bl and not br and not mid:
        return "turn"
    if tl and tr and tl != tr and br == tl and bl == tr and mid == (tl + tr) % 3:
        return "cross"
    return None


def _top_kind(d: LabeledTriangle, i: int) -> str | None:
    n = d.side
    top = d.label(("t", i))
    right = d.label(("r", i, i + 1)) if i < n else d.label(("r", i, n + 1))
    left = d.label(("l", i - 1, i)) if i > 1 else d.label(("l", 0, i))
    if not (top or left or right):
        return "empty"
    if top and ((right == top and not left) or (left == top and not right)):
        return "strand"
    return None


def templates(d: LabeledTriangle) -> list[str]:
    """Kinds of all top triangles and rhombi; raises on an illegal cell."""
    kinds = []
    for i in range(1, d.side + 1):
        kind = _top_kind(d, i)
        if kind is None:
            raise FlowError(f"top triangle {i} matches no template")
        kinds.append(kind)
    for i in range(1, d.side + 1):
        for j in range(i + 1, d.side + 1):
            kind = rhombus_kind(*_rhombus(d, i, j))
            if kind is None:
                raise FlowError(f"rhombus X({i},{j}) matches no template")
            kinds.append(kind)
    return kinds


def uses_legal_templates(d: LabeledTriangle) -> bool:
    try:
        templates(d)
    except FlowError:
        return False
    return True


def format_flow(d: LabeledTriangle) -> str:
    """``N=..; word=..; edges=..`` with edges as ``r2,5:1`` items separated by spaces."""
    order = {"t": 0, "r": 1, "l": 2, "m": 3}
    edges = sorted(d.edge_labels.items(), key=lambda kv: (order[kv[0][0]],) + kv[0][1:])
    body = " ".join(f"{key[0]}{','.join(map(str, key[1:]))}:{val}" for key, val in edges)
    return f"N={d.side}; word={format_word(d.word)}; edges={body}"


def parse_flow(text: str) -> LabeledTriangle:
    try:
        parts = dict(p.strip().split("=", 1) for p in text.split(";"))
        side = int(parts["N"])
        word = parse_word(parts["word"])
        labels = {}
        for token in parts["edges"].split():
            key_text, val = token.split(":")
            if key_text[0] not in "trlm":
                raise ValueError(f"unknown edge kind {key_text[0]!r}")
            labels[(key_text[0],) + tuple(int(x) for x in key_text[1:].split(","))] = int(val)
    except (KeyError, ValueError) as exc:
        raise FlowError(f"malformed flow text: {exc}") from exc
    if len(word.symbols) != side:
        raise FlowError("word length differs from the side of the triangle")
    caps = _caps_from_labels(side, labels)
    return LabeledTriangle(side, word, labels, caps)


def _caps_from_labels(side: int, labels: dict) -> tuple[tuple[int, int], ...]:
    """Caps are the rhombi where a strand turns back up."""
    caps = []
    for key in labels:
        if key[0] == "r":
            i, j = key[1], key[2]
            if j <= side and ("r", i, j + 1) not in labels and ("l", i, j) in labels and ("m", i, j) not in labels:
                caps.append((i, j))
    return tuple(sorted(caps))
