import importlib
import random
import sys

import pytest
from hypothesis import given, strategies as st

import graphobstacle
from graphobstacle import _pykernels, kernels

BACKENDS = kernels.available_backends()
backend_params = pytest.mark.parametrize("impl", list(BACKENDS.values()), ids=list(BACKENDS))


def square(max_n, lo, hi):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    )


@backend_params
def test_backend_api(impl):
    assert impl.BACKEND in ("python", "compiled")
    assert impl.bareiss_det([]) == 1
    assert impl.bareiss_det([[0, 0], [0, 0]]) == 0
    assert impl.faddeev_leverrier([[0]]) == [0, 1]
    assert impl.principal_minors([[2, -1], [-1, 1]], [0, 1, 2, 3]) == [1, 2, 1, 1]


@backend_params
def test_bareiss_handles_huge_entries(impl):
    big = 10**40
    rows = [[big, 1], [1, big]]
    assert impl.bareiss_det(rows) == big * big - 1


@backend_params
def test_jacobi_nonconvergence_is_reported(impl):
    with pytest.raises(ArithmeticError):
        impl.jacobi_eigenvalues([[1.0, 2.0], [2.0, 1.0]], 1e-300, 0)


@given(square(7, -20, 20))
def test_backends_agree_on_integer_kernels(rows):
    ref = BACKENDS["python"]
    for impl in BACKENDS.values():
        assert impl.bareiss_det(rows) == ref.bareiss_det(rows)
        assert impl.faddeev_leverrier(rows) == ref.faddeev_leverrier(rows)


@given(square(8, -5, 5).filter(lambda r: len(r) > 0))
def test_backends_agree_on_jacobi(rows):
    n = len(rows)
    sym = [[float(rows[i][j] + rows[j][i]) for j in range(n)] for i in range(n)]
    ref = BACKENDS["python"].jacobi_eigenvalues(sym, 1e-12, 100)
    for impl in BACKENDS.values():
        assert impl.jacobi_eigenvalues(sym, 1e-12, 100) == pytest.approx(ref, abs=1e-9)


def test_principal_minors_agree():
    rng = random.Random(1)
    rows = [[rng.randint(-3, 3) for _ in range(6)] for _ in range(6)]
    masks = list(range(64))
    ref = BACKENDS["python"].principal_minors(rows, masks)
    for impl in BACKENDS.values():
        assert impl.principal_minors(rows, masks) == ref


def test_compiled_backend_selected_when_built():
    if "compiled" not in BACKENDS:
        pytest.skip("extension not built in this environment")
    assert kernels.BACKEND == "compiled"


def test_falls_back_to_python_without_extension(monkeypatch):
    monkeypatch.setitem(sys.modules, "graphobstacle._ckernels", None)
    monkeypatch.delattr(graphobstacle, "_ckernels", raising=False)
    reloaded = importlib.reload(kernels)
    try:
        assert reloaded.BACKEND == "python"
        assert reloaded.bareiss_det is _pykernels.bareiss_det
    finally:
        monkeypatch.undo()
        importlib.reload(kernels)
