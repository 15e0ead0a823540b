"""The bijection between semistandard tableaux of shape (3^n) and nonelliptic webs."""

from __future__ import annotations

from dataclasses import dataclass

from .m_diagrams import MDiagram, build_m_diagram
from .rs_perm import Permutation, rs_inverse
from .tableaux import (
    Tableau,
    TableauError,
    TableauPairPlusMinus,
    decompose,
    enumerate_semistandard,
    recompose,
    relabel,
    split_box_diamond,
    standardize,
    web_type,
)
from .web_core import PreDiagram, Web, WebError, assemble, faces, is_nonelliptic, trivalize


@dataclass(frozen=True)
class PhiTrace:
    input: Tableau
    pair: TableauPairPlusMinus
    boxes: tuple[Tableau, Tableau]
    diamonds: tuple[Tableau, Tableau]
    m_plus: MDiagram
    m_minus: MDiagram
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    sigma: Permutation
    prediagram: PreDiagram
    web: Web

    @property
    def connections(self) -> tuple[tuple[int, int], ...]:
        """Pairs ``(alpha_i, beta_sigma(i))`` joined by strands."""
        return tuple((a, self.betas[s - 1]) for a, s in zip(self.alphas, self.sigma))


def phi_trace(t: Tableau, k: int) -> PhiTrace:
    pair = decompose(t, k)
    n = pair.n
    m = 3 * n - 2 * k
    box_p, dia_p = split_box_diamond(pair.t_plus)
    box_m, dia_m = split_box_diamond(pair.t_minus)
    m_plus = build_m_diagram(box_p, num_vertices=k)
    m_minus = build_m_diagram(box_m, num_vertices=m)
    alphas = tuple(sorted(dia_p.entries()))
    betas = tuple(sorted(dia_m.entries()))
    r = relabel(dia_p, standardize(alphas))
    q = relabel(dia_m, standardize(betas))
    sigma = rs_inverse(r, q)
    strands = [(alphas[i], betas[s - 1]) for i, s in enumerate(sigma)]
    pre = assemble(k, m, m_plus.configs, m_minus.configs, strands)
    web = trivalize(pre)
    return PhiTrace(
        t, pair, (box_p, box_m), (dia_p, dia_m), m_plus, m_minus, alphas, betas, sigma, pre, web
    )


def phi(t: Tableau, k: int) -> Web:
    """Map a semistandard tableau of shape (3^n) and type for ``k`` to its web."""
    return phi_trace(t, k).web


_ROW_OF_DELTA = {1: 0, 0: 1, -1: 2}


def _tableau_from_delta(delta) -> Tableau:
    rows: list[list[int]] = [[], [], []]
    for i, d in enumerate(delta, start=1):
        if d not in _ROW_OF_DELTA:
            raise WebError(f"boundary depth difference {d} is outside -1..1")
        rows[_ROW_OF_DELTA[d]].append(i)
    t = Tableau(tuple(tuple(r) for r in rows))
    if not t.is_standard() or t.shape != tuple(len(r) for r in rows if r):
        raise WebError("boundary depth differences do not form a standard tableau")
    return t


def pair_from_web(w: Web, n: int, k: int) -> TableauPairPlusMinus:
    if w.top != "+" * k or w.bottom != "-" * (3 * n - 2 * k):
        raise WebError(f"web boundary does not match n={n}, k={k}")
    if not is_nonelliptic(w):
        raise WebError("web is elliptic")
    fs = faces(w)
    return TableauPairPlusMinus(_tableau_from_delta(fs.delta_top), _tableau_from_delta(fs.delta_bottom), n, k)


def phi_inverse(w: Web, n: int, k: int) -> Tableau:
    """Recover the tableau from the depth differences at the boundary of ``w``."""
    try:
        return recompose(pair_from_web(w, n, k))
    except TableauError as exc:
        raise WebError(f"web is not in the image: {exc}") from exc


def all_inputs(n: int, k: int) -> list[Tableau]:
    return enumerate_semistandard((3,) * n, web_type(n, k))
