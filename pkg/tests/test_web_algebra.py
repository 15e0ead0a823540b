import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a2web.web_algebra import (
    WebSum,
    closure,
    f,
    generator_f,
    generator_g,
    identity,
    multiply,
    reduce,
    stack,
    verify_relations,
    word_product,
)
from a2web.web_core import WebError, is_nonelliptic

import oracles


def test_f_squared():
    assert f(1, 2) * f(1, 2) == 2 * f(1, 2)


def test_f1_f2_f1_splits():
    prod = word_product(["f1", "f2", "f1"], 3)
    assert prod == generator_g(1, 3) + f(1, 3)
    assert len(prod.terms) == 2


def test_g_is_a_single_web_with_two_internal_vertices():
    g = generator_g(1, 3)
    ((coef, web),) = g.items()
    assert coef == 1
    assert len(list(web.internal_vertices)) == 2
    assert is_nonelliptic(web)


def test_g_squared():
    g = generator_g(1, 3)
    assert g * g == 6 * g


def test_identity_is_neutral():
    one = WebSum.of(identity(3))
    assert one * f(2, 3) == f(2, 3)
    assert f(2, 3) * one == f(2, 3)


def test_sum_algebra():
    a = f(1, 3)
    assert (a - a).is_zero()
    assert repr(a - a) == "0"
    assert a + a == 2 * a == a * 2


def test_generator_bounds():
    with pytest.raises(WebError):
        generator_f(3, 3)
    with pytest.raises(WebError):
        generator_g(2, 3)
    with pytest.raises(WebError):
        word_product(["h1"], 3)


def test_boundary_mismatch():
    with pytest.raises(WebError):
        multiply(f(1, 2), f(1, 3))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_relation_truth_values_match_tensor_model(k):
    ours = {r.instance: r.passed for r in verify_relations(k)}
    expected = oracles.tensor_relations(k)
    for key, value in expected.items():
        assert ours[key] == value, key
    extra = set(ours) - set(expected)
    assert all(key.endswith("a single web") for key in extra)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.sampled_from(["f1", "f2", "f3", "g1", "g2"]), max_size=4),
    st.lists(st.sampled_from(["f1", "f2", "f3", "g1", "g2"]), max_size=4),
    st.integers(-3, 3),
)
def test_equality_agrees_with_matrices(u, v, c):
    k = 4
    lhs = word_product(u, k)
    rhs = c * word_product(v, k)
    same = np.array_equal(oracles.tensor_matrix(u, k), c * oracles.tensor_matrix(v, k))
    assert (lhs == rhs) == same


def test_product_is_associative():
    a, b, c = f(1, 4), generator_g(2, 4), f(3, 4) + f(1, 4)
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_closure_dimension_matches_matrix_algebra(k):
    assert len(closure(k)) == oracles.algebra_dimension(k)


def test_closure_dimensions_frozen():
    assert [len(closure(k)) for k in range(1, 6)] == [1, 2, 6, 23, 103]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(["f1", "f2", "f3"]), min_size=2, max_size=5), st.integers(0, 10**6))
def test_reduction_is_confluent(word, seed):
    w = identity(4)
    for name in word:
        w = stack(w, generator_f(int(name[1:]), 4))
    assert reduce(w, random.Random(seed)) == reduce(w)
