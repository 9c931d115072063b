"""Backend dispatch for the numeric kernels.

The numba backend is used when numba imports and ``DPCOMB_DISABLE_NUMBA``
is unset (or ``0``/``false``). Set ``DPCOMB_DISABLE_NUMBA=1`` to force the
pure-numpy path. Both backends are importable directly for benchmarking.

Kernels:

``cheb_u_pair(n, x)``
    ``(U_{n-1}(x), U_{n-2}(x))`` elementwise, ``n >= 1``, with ``U_{-1} = 0``.
``su11_chain(z1, z2)``
    ordered product of SU(1,1) factors stored as ``(n_factors, m)`` arrays.
``rk4_fundamental(vnodes, energies, h)``
    fundamental pair of ``w'' = (V - E) w`` across ``[-1, 1]``.
"""
import os

from . import _numpy as numpy_backend

try:
    from . import _numba as numba_backend
except ImportError:  # numba not installed
    numba_backend = None


def _numba_disabled():
    flag = os.environ.get("DPCOMB_DISABLE_NUMBA", "").strip().lower()
    return flag not in ("", "0", "false", "no")


if numba_backend is not None and not _numba_disabled():
    BACKEND = "numba"
    _impl = numba_backend
else:
    BACKEND = "numpy"
    _impl = numpy_backend

cheb_u_pair = _impl.cheb_u_pair
su11_chain = _impl.su11_chain
rk4_fundamental = _impl.rk4_fundamental

__all__ = ["BACKEND", "cheb_u_pair", "su11_chain", "rk4_fundamental",
           "numpy_backend", "numba_backend"]
