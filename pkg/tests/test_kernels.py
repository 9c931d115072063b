import numpy as np
import pytest

from dpcomb import kernels
from dpcomb.kernels import numpy_backend as npk

nbk = kernels.numba_backend
needs_numba = pytest.mark.skipif(nbk is None, reason="numba not installed")


def test_env_flag_selects_numpy(monkeypatch):
    import importlib
    monkeypatch.setenv("DPCOMB_DISABLE_NUMBA", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "numpy"
        assert mod.rk4_fundamental is mod.numpy_backend.rk4_fundamental
    finally:
        monkeypatch.delenv("DPCOMB_DISABLE_NUMBA")
        importlib.reload(kernels)


@needs_numba
def test_cheb_backends_agree():
    x = np.linspace(-2.5, 2.5, 301)
    for n in (1, 2, 9, 60):
        a, b = npk.cheb_u_pair(n, x)
        c, d = nbk.cheb_u_pair(n, x)
        np.testing.assert_allclose(a, c, rtol=1e-14, atol=0)
        np.testing.assert_allclose(b, d, rtol=1e-14, atol=0)


@needs_numba
def test_chain_backends_agree():
    rng = np.random.default_rng(3)
    z1 = rng.normal(size=(7, 40)) + 1j * rng.normal(size=(7, 40))
    z2 = rng.normal(size=(7, 40)) + 1j * rng.normal(size=(7, 40))
    for a, b in zip(npk.su11_chain(z1, z2), nbk.su11_chain(z1, z2)):
        np.testing.assert_allclose(a, b, rtol=1e-13)


@needs_numba
def test_rk4_backends_agree():
    nodes = np.sin(np.linspace(-1, 1, 257)) * 3.0
    e = np.array([0.0, 0.01, 0.3])
    np.testing.assert_allclose(npk.rk4_fundamental(nodes, e, 2 / 128),
                               nbk.rk4_fundamental(nodes, e, 2 / 128), rtol=1e-13, atol=1e-15)


def test_rk4_free_particle():
    # V = 0, E = w^2: y1 = cos(2w), y2 = sin(2w)/w across [-1, 1]
    w = 0.7
    out = kernels.rk4_fundamental(np.zeros(2 * 512 + 1), np.array([w * w]), 2 / 512)[:, 0]
    np.testing.assert_allclose(out, [np.cos(2 * w), -w * np.sin(2 * w), np.sin(2 * w) / w, np.cos(2 * w)],
                               atol=1e-11)


def test_rk4_fourth_order():
    nodes = lambda n: 2.0 * np.cos(np.linspace(-1, 1, 2 * n + 1))
    e = np.array([0.5])
    ref = kernels.rk4_fundamental(nodes(4096), e, 2 / 4096)
    err = [np.abs(kernels.rk4_fundamental(nodes(n), e, 2 / n) - ref).max() for n in (32, 64)]
    assert 12 < err[0] / err[1] < 20
