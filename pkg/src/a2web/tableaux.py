"""Partitions, Young tableaux, and the tableau surgery used by the web bijection."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]


class TableauError(ValueError):
    """Raised when a tableau violates a precondition."""


def is_partition(shape: Sequence[int]) -> bool:
    return all(p > 0 for p in shape) and all(
        shape[i] >= shape[i + 1] for i in range(len(shape) - 1)
    )


def conjugate_partition(shape: Sequence[int]) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p > c) for c in range(shape[0]))


@dataclass(frozen=True)
class Tableau:
    """A (possibly skew) Young tableau.

    ``rows`` holds only the filled cells of each row; for a skew tableau row ``i``
    starts at column ``inner[i]``.
    """

    rows: tuple[tuple[int, ...], ...]
    inner: Partition = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        while rows and not rows[-1] and len(self.inner) < len(rows):
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)
        inner = tuple(p for p in self.inner if p > 0)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows))

    def _offset(self, i: int) -> int:
        return self.inner[i] if i < len(self.inner) else 0

    @property
    def shape(self) -> Partition:
        return tuple(self._offset(i) + len(r) for i, r in enumerate(self.rows) if self._offset(i) + len(r))

    @property
    def inner_shape(self) -> Partition:
        return self.inner

    @property
    def is_skew(self) -> bool:
        return bool(self.inner)

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(row, col, entry)`` in row-major order."""
        for i, r in enumerate(self.rows):
            off = self._offset(i)
            for j, v in enumerate(r):
                yield i, off + j, v

    def entry(self, i: int, j: int) -> int | None:
        if i >= len(self.rows):
            return None
        j -= self._offset(i)
        if 0 <= j < len(self.rows[i]):
            return self.rows[i][j]
        return None

    def entries(self) -> list[int]:
        return [v for _, _, v in self.cells()]

    def columns(self) -> list[tuple[int, ...]]:
        width = max(self.shape, default=0)
        cols: list[list[int]] = [[] for _ in range(width)]
        for _, j, v in self.cells():
            cols[j].append(v)
        return [tuple(c) for c in cols]

    def content(self) -> Counter:
        return Counter(self.entries())

    def is_semistandard(self) -> bool:
        for i, j, v in self.cells():
            right = self.entry(i, j + 1)
            below = self.entry(i + 1, j)
            if right is not None and right < v:
                return False
            if below is not None and below <= v:
                return False
        return True

    def is_standard(self) -> bool:
        vals = self.entries()
        return self.is_semistandard() and sorted(vals) == list(range(1, len(vals) + 1))

    @property
    def kind(self) -> str:
        if self.is_skew:
            return "skew"
        return "standard" if self.is_standard() else "semistandard"

    def row_of(self, value: int) -> int:
        """Return the 0-based row index holding ``value``."""
        for i, r in enumerate(self.rows):
            if value in r:
                return i
        raise KeyError(value)

    def __str__(self) -> str:
        return format_tableau(self)


def format_tableau(t: Tableau) -> str:
    parts = []
    for i, r in enumerate(t.rows):
        cells = ["."] * t._offset(i) + [str(v) for v in r]
        parts.append(",".join(cells))
    return "/".join(parts)


def parse_tableau(text: str) -> Tableau:
    text = text.strip()
    if not text:
        return Tableau(())
    rows, inner = [], []
    for part in text.split("/"):
        cells = [c.strip() for c in part.split(",") if c.strip()]
        dots = 0
        while dots < len(cells) and cells[dots] == ".":
            dots += 1
        try:
            rows.append(tuple(int(c) for c in cells[dots:]))
        except ValueError as exc:
            raise TableauError(f"bad tableau cell in {part!r}") from exc
        inner.append(dots)
    return Tableau(tuple(rows), tuple(inner))


def conjugate(t: Tableau) -> Tableau:
    """Swap rows and columns of a straight-shape tableau."""
    if t.is_skew:
        raise TableauError("conjugate expects a straight shape")
    return Tableau(tuple(t.columns()))


def hook_lengths(shape: Sequence[int]) -> list[list[int]]:
    conj = conjugate_partition(shape)
    return [[shape[i] - j + conj[j] - i - 1 for j in range(shape[i])] for i in range(len(shape))]


def count_standard_hook(shape: Sequence[int]) -> int:
    """Number of standard tableaux of ``shape`` by the hook-length formula."""
    if not is_partition(shape):
        raise TableauError(f"not a partition: {tuple(shape)}")
    prod = 1
    for row in hook_lengths(shape):
        for h in row:
            prod *= h
    return factorial(sum(shape)) // prod


def enumerate_semistandard(shape: Sequence[int], type_: Iterable[int]) -> list[Tableau]:
    """All semistandard tableaux of ``shape`` whose multiset of entries is ``type_``.

    Output is sorted lexicographically by row-major reading word.
    """
    shape = tuple(shape)
    if shape and not is_partition(shape):
        raise TableauError(f"not a partition: {shape}")
    remaining = Counter(type_)
    if sum(shape) != sum(remaining.values()):
        return []
    values = sorted(remaining)
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]
    grid: dict[tuple[int, int], int] = {}
    out: list[Tableau] = []

    def fill(pos: int):
        if pos == len(cells):
            out.append(Tableau(tuple(tuple(grid[(i, j)] for j in range(r)) for i, r in enumerate(shape))))
            return
        i, j = cells[pos]
        lo = values[0] if values else 0
        if j > 0:
            lo = max(lo, grid[(i, j - 1)])
        if i > 0:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in values:
            if v < lo or not remaining[v]:
                continue
            remaining[v] -= 1
            grid[(i, j)] = v
            fill(pos + 1)
            remaining[v] += 1
        grid.pop((i, j), None)

    fill(0)
    out.sort(key=lambda t: tuple(t.entries()))
    return out


def enumerate_standard(shape: Sequence[int]) -> list[Tableau]:
    return enumerate_semistandard(shape, range(1, sum(shape) + 1))


def brute_force_standard_count(shape: Sequence[int]) -> int:
    """Count standard fillings by trying every permutation of the entries."""
    shape = tuple(shape)
    size = sum(shape)
    count = 0
    for perm in permutations(range(1, size + 1)):
        it = iter(perm)
        t = Tableau(tuple(tuple(next(it) for _ in range(r)) for r in shape))
        if t.is_semistandard():
            count += 1
    return count


def web_type(n: int, k: int) -> list[int]:
    """The content ``{1^2, ..., k^2, k+1, ..., 3n-k}`` attached to shape ``(3^n)``."""
    if k < 0 or 2 * k > 3 * n:
        raise TableauError(f"need 0 <= 2k <= 3n, got n={n}, k={k}")
    return [v for v in range(1, k + 1) for _ in range(2)] + list(range(k + 1, 3 * n - k + 1))


def complement_phi(t: Tableau, n: int, k: int) -> Tableau:
    """Complement a semistandard tableau inside the ``k x n`` rectangle.

    ``t`` has shape inside ``(n^k)`` and content ``{1^(n-1), ..., k^(n-1)}``. Each
    column is completed with its missing values, the rectangle is rotated by 180
    degrees and conjugated, giving a standard tableau on ``{1..k}``.
    """
    if t.is_skew or not t.is_semistandard():
        raise TableauError("complement_phi expects a semistandard straight tableau")
    if len(t.rows) > k or any(len(r) > n for r in t.rows):
        raise TableauError(f"shape {t.shape} does not fit in ({n}^{k})")
    if t.content() != Counter({v: n - 1 for v in range(1, k + 1)} if n > 1 else {}):
        raise TableauError(f"tableau {t} has the wrong type for n={n}, k={k}")
    cols = t.columns() + [()] * (n - len(t.columns()))
    full = set(range(1, k + 1))
    rows = [tuple(sorted(full - set(cols[n - 1 - r]))) for r in range(n)]
    return Tableau(tuple(rows))


def complement_phi_inverse(s: Tableau, n: int, k: int) -> Tableau:
    if s.is_skew or not s.is_standard() or len(s) != k:
        raise TableauError(f"expected a standard tableau on 1..{k}, got {s}")
    if len(s.rows) > n:
        raise TableauError(f"{s} has more than {n} rows")
    rows = list(s.rows) + [()] * (n - len(s.rows))
    full = set(range(1, k + 1))
    cols = [sorted(full - set(rows[n - 1 - c])) for c in range(n)]
    height = max((len(c) for c in cols), default=0)
    out = tuple(tuple(c[i] for c in cols if len(c) > i) for i in range(height))
    result = Tableau(out)
    if result.shape != tuple(len(r) for r in out) or not result.is_semistandard():
        raise TableauError(f"{s} is not in the image of the complement map")
    return result


@dataclass(frozen=True)
class TableauPairPlusMinus:
    """The pair ``(T+, T-)`` obtained by cutting a tableau of shape ``(3^n)``."""

    t_plus: Tableau
    t_minus: Tableau
    n: int
    k: int

    def __post_init__(self):
        if len(self.t_plus) != self.k or len(self.t_minus) != 3 * self.n - 2 * self.k:
            raise TableauError("pair sizes do not match (n, k)")
        for t in (self.t_plus, self.t_minus):
            if len(t.rows) > 3 or not t.is_standard():
                raise TableauError(f"{t} is not a standard tableau with at most 3 rows")


def check_web_tableau(t: Tableau, n: int, k: int) -> None:
    if t.is_skew or t.shape != (3,) * n:
        raise TableauError(f"expected shape (3^{n}), got {t.shape}")
    if sorted(t.entries()) != web_type(n, k):
        raise TableauError(f"tableau {t} does not have type for n={n}, k={k}")
    if not t.is_semistandard():
        raise TableauError(f"tableau {t} is not semistandard")


def decompose(t: Tableau, k: int) -> TableauPairPlusMinus:
    """Cut ``t`` into the standard pair ``(T+, T-)``."""
    n = len(t.rows)
    check_web_tableau(t, n, k)
    low = Tableau(tuple(tuple(v for v in r if v <= k) for r in t.rows))
    t_plus = complement_phi(low, 3, k) if k else Tableau(())
    top = 3 * n - k + 1
    # rotate the upper part by 180 degrees inside the n x 3 box, then conjugate
    rotated = [[top - v for v in reversed(t.rows[n - 1 - i]) if v > k] for i in range(n)]
    t_minus = conjugate(Tableau(tuple(tuple(r) for r in rotated if r)))
    return TableauPairPlusMinus(t_plus, t_minus, n, k)


def recompose(pair: TableauPairPlusMinus) -> Tableau:
    n, k = pair.n, pair.k
    low = complement_phi_inverse(pair.t_plus, 3, k) if k else Tableau(())
    rotated = conjugate(pair.t_minus).rows if len(pair.t_minus) else ()
    top = 3 * n - k + 1
    rows = []
    for i in range(n):
        lo = low.rows[i] if i < len(low.rows) else ()
        r = n - 1 - i
        hi = tuple(top - v for v in reversed(rotated[r])) if r < len(rotated) else ()
        if len(lo) + len(hi) != 3:
            raise TableauError("T+ and T- shapes are not complementary")
        rows.append(lo + hi)
    result = Tableau(tuple(rows))
    check_web_tableau(result, n, k)
    return result


def split_box_diamond(t: Tableau) -> tuple[Tableau, Tableau]:
    """Split a standard tableau with at most 3 rows into ``(T_box, T_diamond)``.

    Each third-row entry is matched with the largest unused smaller entry of row 2,
    which is then matched with the largest unused smaller entry of row 1. The
    matched triples form ``T_box``; the leftovers, pushed left, form ``T_diamond``.
    """
    if len(t.rows) > 3 or t.is_skew:
        raise TableauError("split_box_diamond expects a straight shape with at most 3 rows")
    rows = list(t.rows) + [()] * (3 - len(t.rows))
    used1: set[int] = set()
    used2: set[int] = set()
    box: list[list[int]] = [[], [], []]
    for ell in rows[2]:
        cand = [v for v in rows[1] if v < ell and v not in used2]
        if not cand:
            raise TableauError(f"no row-2 partner for {ell} in {t}")
        j = max(cand)
        used2.add(j)
        cand = [v for v in rows[0] if v < j and v not in used1]
        if not cand:
            raise TableauError(f"no row-1 partner for {j} in {t}")
        i = max(cand)
        used1.add(i)
        box[0].append(i)
        box[1].append(j)
        box[2].append(ell)
    t_box = Tableau(tuple(tuple(sorted(r)) for r in box))
    diamond = (
        tuple(v for v in rows[0] if v not in used1),
        tuple(v for v in rows[1] if v not in used2),
    )
    return t_box, Tableau(diamond)


def standardize(values: Iterable[int]) -> dict[int, int]:
    """Order-preserving relabeling of ``values`` onto ``1..len``."""
    return {v: i + 1 for i, v in enumerate(sorted(values))}


def relabel(t: Tableau, mapping: dict[int, int]) -> Tableau:
    return Tableau(tuple(tuple(mapping[v] for v in r) for r in t.rows), t.inner)
