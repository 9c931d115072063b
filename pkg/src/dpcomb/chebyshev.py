"""Chebyshev polynomials of the second kind on the whole real line.

Values come from the forward three-term recurrence
``U_n = 2x U_{n-1} - U_{n-2}`` with ``U_0 = 1`` and ``U_1 = 2x``. Outside
``[-1, 1]`` the recurrence grows monotonically and stays accurate; inside
it reproduces ``sin((n+1)phi) / sin(phi)`` to about ``n`` ulps.
"""
import math

import numpy as np

from . import kernels


def _check_order(n, minimum):
    if isinstance(n, bool) or int(n) != n or n < minimum:
        raise ValueError(f"polynomial order must be an integer >= {minimum}, got {n!r}")
    return int(n)


def chebyshev_u(n, x):
    """Return ``U_n(x)``. ``x`` may be a scalar or an array."""
    n = _check_order(n, 0)
    if np.ndim(x) == 0:
        x = float(x)
        if not math.isfinite(x):
            raise ValueError("x must be finite")
        prev, cur = 0.0, 1.0
        for _ in range(n):
            prev, cur = cur, 2.0 * x * cur - prev
        return cur
    return kernels.cheb_u_pair(n + 1, x)[0]


def chebyshev_u_pair(n, x):
    """Return ``(U_{n-1}(x), U_{n-2}(x))`` from a single recurrence pass.

    ``U_{-1}`` is taken as 0, so ``n = 1`` gives ``(1, 0)``.
    """
    n = _check_order(n, 1)
    if np.ndim(x) == 0:
        x = float(x)
        if not math.isfinite(x):
            raise ValueError("x must be finite")
        prev, cur = 0.0, 1.0
        for _ in range(n - 1):
            prev, cur = cur, 2.0 * x * cur - prev
        return cur, prev
    return kernels.cheb_u_pair(n, x)
