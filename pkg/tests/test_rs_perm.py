import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a2web.rs_perm import (
    PermutationError,
    brute_321_avoiding,
    diagram,
    format_matching,
    format_permutation,
    is_321_avoiding,
    is_noncrossing_matching,
    parse_permutation,
    psi,
    rs,
    rs_inverse,
    temperley_lieb,
    trip,
)
from a2web.tableaux import format_tableau

import oracles

EXAMPLE_12 = (4, 1, 6, 2, 3, 7, 8, 9, 12, 5, 10, 11)


def perms_321(ell):
    return [p for p in itertools.permutations(range(1, ell + 1)) if brute_321_avoiding(p)]


def test_parse_and_format():
    assert parse_permutation("[3,1,2]") == (3, 1, 2)
    assert parse_permutation("3, 1, 2") == (3, 1, 2)
    assert format_permutation((2, 1)) == "[2,1]"
    for bad in ("[1,1]", "[0,1]", "[1,x]"):
        with pytest.raises(PermutationError):
            parse_permutation(bad)


@pytest.mark.parametrize("sigma,r,q", [
    ((4, 2, 1, 5, 3), "1,4/2,5/3", "1,3/2,5/4"),
    ((3, 1, 2, 4), "1,3,4/2", "1,2,4/3"),
    ((1,), "1", "1"),
])
def test_rs_examples(sigma, r, q):
    R, Q = rs(sigma)
    assert (format_tableau(R), format_tableau(Q)) == (r, q)


def test_rs_empty():
    R, Q = rs(())
    assert len(R) == 0 and len(Q) == 0


@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(1, 9))))
def test_rs_matches_oracle(sigma):
    R, Q = rs(sigma)
    assert (R.rows, Q.rows) == oracles.rs_oracle(sigma)


def test_rs_inverse_exhaustive_s5():
    seen = set()
    for sigma in itertools.permutations(range(1, 6)):
        R, Q = rs(sigma)
        assert rs_inverse(R, Q) == sigma
        seen.add((R.rows, Q.rows))
    assert len(seen) == 120


def test_321_avoidance():
    assert is_321_avoiding(EXAMPLE_12)
    assert not is_321_avoiding((3, 2, 1))
    assert len(perms_321(4)) == 14
    for ell in range(7):
        for p in itertools.permutations(range(1, ell + 1)):
            assert is_321_avoiding(p) == brute_321_avoiding(p)


def test_diagram_rejects_321():
    with pytest.raises(PermutationError):
        diagram((3, 2, 1))


def test_small_deltas():
    d = diagram((2, 1))
    assert d.delta_top == (1, 0)
    d = diagram((1, 2, 3))
    assert d.delta_top == (1, 1, 1) and d.delta_bot == (1, 1, 1)


def test_example_12_deltas():
    d = diagram(EXAMPLE_12)
    assert d.delta_top == (1, 0, 1, 0, 1, 1, 1, 1, 1, 0, 0, 1)
    assert d.delta_bot == (1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 1, 0)


@pytest.mark.parametrize("ell", [3, 4, 5])
def test_deltas_match_straight_line_geometry(ell):
    for p in perms_321(ell):
        d = diagram(p)
        assert (d.delta_top, d.delta_bot) == oracles.straight_line_deltas(p)


def test_deltas_match_geometry_on_example_12():
    d = diagram(EXAMPLE_12)
    assert (d.delta_top, d.delta_bot) == oracles.straight_line_deltas(EXAMPLE_12)


@pytest.mark.parametrize("ell", range(1, 8))
def test_psi_equals_rs(ell):
    for p in perms_321(ell):
        assert psi(p) == rs(p)


def test_psi_identity():
    s_plus, s_minus = psi((1, 2, 3, 4))
    assert format_tableau(s_plus) == "1,2,3,4"
    assert s_plus == s_minus


def test_trip_on_single_crossing():
    # in [2,1] each top vertex turns once and comes back to the top
    assert trip((2, 1), ("t", 1)) == (("t", 2), 1)
    assert trip((2, 1), ("b", 1)) == (("b", 2), 1)
    assert trip((1, 2), ("t", 1)) == (("b", 1), 0)


def test_temperley_lieb_examples():
    assert format_matching(temperley_lieb((1, 2))) == "t1-b1,t2-b2"
    assert format_matching(temperley_lieb((2, 1))) == "t1-t2,b1-b2"


@pytest.mark.parametrize("ell", range(1, 7))
def test_temperley_lieb_is_a_bijection_onto_noncrossing(ell):
    images = {temperley_lieb(p) for p in perms_321(ell)}
    assert all(is_noncrossing_matching(m, ell) for m in images)
    assert len(images) == len(perms_321(ell)) == oracles.catalan(ell)
    assert len(images) == oracles.noncrossing_count(2 * ell)
