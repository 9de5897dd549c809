import math

import numpy as np
import pytest

from switchgraphs import _kernels


@pytest.mark.parametrize("n", range(0, 8))
def test_backends_agree(n):
    rng = np.random.default_rng(n)
    m = n * (n - 1) // 2
    bits = rng.integers(0, 1 << m, size=300, dtype=np.uint64) if m else np.zeros(5, np.uint64)
    if not _kernels.HAVE_NUMBA:
        pytest.skip("numba not installed")
    np.testing.assert_array_equal(_kernels.canonical_batch(bits, n, "numba"),
                                  _kernels.canonical_batch(bits, n, "numpy"))
    np.testing.assert_array_equal(_kernels.switch_iso_batch(bits, n, "numba"),
                                  _kernels.switch_iso_batch(bits, n, "numpy"))


@pytest.mark.parametrize("n", range(1, 7))
def test_perm_table_blocks(n):
    perms, table = _kernels.perm_data(n)
    assert perms.shape == (math.factorial(n), n)
    block = math.factorial(n - 1)
    for v in range(n):
        assert (perms[v * block:(v + 1) * block, v] == n - 1).all()
    # table rows are bijections on pair positions
    m = n * (n - 1) // 2
    assert (np.sort(table, axis=1) == np.arange(m)).all()


def test_relabel_all_contains_identity():
    bits = 0b101101
    images = _kernels.relabel_all(bits, 4)
    assert bits in images.tolist()
    assert images.min() == _kernels.canonical_batch([bits], 4)[0]


def test_kernel_limit():
    with pytest.raises(ValueError):
        _kernels.canonical_batch([0], 11)


def test_backend_flag(monkeypatch):
    import importlib

    monkeypatch.setenv("SWITCHGRAPHS_BACKEND", "numpy")
    try:
        mod = importlib.reload(_kernels)
        assert mod.BACKEND == "numpy"
        monkeypatch.setenv("SWITCHGRAPHS_BACKEND", "fortran")
        with pytest.raises(ImportError):
            importlib.reload(_kernels)
    finally:
        monkeypatch.delenv("SWITCHGRAPHS_BACKEND")
        importlib.reload(_kernels)
