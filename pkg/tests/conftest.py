import sys

import pytest

from dpcomb import kernels

BACKENDS = [kernels.numpy_backend] + ([kernels.numba_backend] if kernels.numba_backend else [])


@pytest.fixture(params=BACKENDS, ids=lambda b: b.__name__.rsplit("_", 1)[-1])
def backend(request, monkeypatch):
    """Run a test once per kernel backend by swapping the dispatch table."""
    for name in ("cheb_u_pair", "su11_chain", "rk4_fundamental"):
        monkeypatch.setattr(kernels, name, getattr(request.param, name))
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
