import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a2web import _pykernels, kernels
from a2web.bijection import all_inputs, phi
from a2web.web_core import _framed

compiled = pytest.mark.skipif(kernels._compiled is None, reason="extension not built")


@pytest.fixture(autouse=True)
def restore_backend():
    before = kernels.BACKEND
    yield
    kernels.use_backend(before)


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@compiled
@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(1, 30))))
def test_rs_insert_parity(perm):
    assert kernels._compiled.rs_insert(list(perm)) == _pykernels.rs_insert(list(perm))


@compiled
@settings(max_examples=200, deadline=None)
@given(st.permutations(list(range(40))))
def test_cycle_labels_parity(perm):
    a = kernels._compiled.cycle_labels(list(perm))
    b = _pykernels.cycle_labels(list(perm))
    assert (list(a[0]), a[1]) == (list(b[0]), b[1])


@compiled
@pytest.mark.parametrize("n,k", [(2, 1), (3, 2), (4, 3)])
def test_dual_bfs_parity(n, k):
    for t in all_inputs(n, k):
        fr = _framed(phi(t, k))
        total = len(fr.vertex)
        labels, count = _pykernels.cycle_labels([fr.cw(d ^ 1) for d in range(total)])
        args = (labels, [d ^ 1 for d in range(total)], [d >= fr.nd for d in range(total)], count, labels[fr.corner_dart])
        assert list(kernels._compiled.dual_bfs(*args)) == list(_pykernels.dual_bfs(*args))


@pytest.mark.parametrize("backend", ["python", "compiled"])
def test_results_independent_of_backend(backend):
    if backend == "compiled" and kernels._compiled is None:
        pytest.skip("extension not built")
    kernels.use_backend(backend)
    from a2web.web_core import canonical_form

    forms = sorted(canonical_form(phi(t, 2)) for t in all_inputs(3, 2))
    kernels.use_backend("python")
    assert forms == sorted(canonical_form(phi(t, 2)) for t in all_inputs(3, 2))
