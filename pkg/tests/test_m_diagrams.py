from fractions import Fraction
import itertools

import pytest

from a2web.m_diagrams import (
    MDiagram,
    RELATIVE_CASES,
    build_m_diagram,
    circle_depth,
    circle_depth_at,
    format_m_diagram,
    parse_m_diagram,
    relative_position,
    relative_tableau,
)
from a2web.tableaux import TableauError, conjugate, enumerate_standard, parse_tableau

import oracles


def test_example_from_transpose():
    t = conjugate(parse_tableau("1,3,5/2,4,6"))
    m = build_m_diagram(t)
    assert m.arcs == ((1, 4), (2, 3), (3, 6), (4, 5))
    assert m.configs == ((1, 4, 5), (2, 3, 6))
    assert m.isolated == ()


def test_single_column():
    m = build_m_diagram(parse_tableau("1/2/3"))
    assert m.configs == ((1, 2, 3),)
    assert m.singles == ()
    assert [m.degree(v) for v in (1, 2, 3)] == [1, 2, 1]


def test_two_rows_give_singles():
    m = build_m_diagram(parse_tableau("1,2/3,4"))
    assert m.configs == ()
    assert m.singles == ((1, 4), (2, 3))


def test_isolated_and_extra_vertices():
    m = build_m_diagram(parse_tableau("1,2/3"), num_vertices=5)
    assert m.isolated == (1, 4, 5)


def test_rejects_bad_input():
    with pytest.raises(TableauError):
        build_m_diagram(parse_tableau("1/2/3/4"))
    with pytest.raises(TableauError):
        build_m_diagram(parse_tableau("1,1/2"))


@pytest.mark.parametrize("shape", [(2, 2, 2), (3, 3, 3), (3, 2, 1), (4, 3, 1)])
def test_arcs_of_one_level_never_cross(shape):
    # row1-row2 arcs are pairwise noncrossing, and so are row2-row3 arcs
    for t in enumerate_standard(shape):
        m = build_m_diagram(t)
        lower = [(i, j) for i, j, _ in m.configs] + list(m.singles)
        upper = [(j, l) for _, j, l in m.configs]
        for level in (lower, upper):
            for (a, b), (c, d) in itertools.combinations(level, 2):
                assert not (a < c < b < d or c < a < d < b)


def test_circle_depth_nested():
    m = MDiagram(4, (), ((1, 4), (2, 3)))
    assert circle_depth(m, (2, "right")) == 2
    assert circle_depth(m, (1, "left")) == 0
    assert circle_depth(m, Fraction(3, 2)) == 1


@pytest.mark.parametrize("shape", [(2, 2, 2), (3, 3, 3)])
def test_circle_depth_at_matches_semicircles(shape):
    pts = [(Fraction(2 * i + 1, 4), Fraction(j, 8)) for i in range(1, 4 * shape[0] * 3) for j in (1, 3, 7)]
    for t in enumerate_standard(shape)[:10]:
        m = build_m_diagram(t)
        for x, y in pts:
            assert circle_depth_at(m, x, y * y) == oracles.semicircle_depth(m.arcs, x, y)


def test_format_parse_round_trip():
    for t in enumerate_standard((3, 3, 2)):
        m = build_m_diagram(t)
        text = format_m_diagram(m)
        assert parse_m_diagram(text) == m
    assert format_m_diagram(MDiagram(3, ((1, 2, 3),))) == "n=3; arcs=1-2,2-3"


def test_parse_rejects_junk():
    with pytest.raises(ValueError):
        parse_m_diagram("arcs=1-2")


def test_relative_positions_cover_five_cases():
    seen = set()
    for t in enumerate_standard((2, 2, 2)):
        c1 = tuple(r[0] for r in t.rows)
        c2 = tuple(r[1] for r in t.rows)
        seen.add(relative_position(c1, c2))
    assert seen == set(RELATIVE_CASES.values()) == {"I", "II", "III", "IV", "V"}


def test_relative_position_examples():
    assert relative_position((1, 2, 3), (4, 5, 6)) == "I"
    assert relative_position((1, 5, 6), (2, 3, 4)) == "II"
    assert relative_tableau((10, 20, 30), (40, 50, 60)).rows == ((1, 4), (2, 5), (3, 6))
    with pytest.raises(ValueError):
        relative_position((1, 2, 3), (3, 4, 5))
