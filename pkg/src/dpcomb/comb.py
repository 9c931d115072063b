"""Closed-form scattering through an ideal delta'_theta comb.

With ``alpha = (1 + theta^2) / (2 theta) * cos k``,

    1/t_n   = (1+theta^2)/(2 theta) U_{n-1}(alpha) e^{i(n-1)k} - U_{n-2}(alpha) e^{ink}
    r_n/t_n = (1-theta^2)/(2 theta) U_{n-1}(alpha) e^{i(n-1)k}
    T_n     = 1 / (1 + (1-theta^2)^2/(4 theta^2) U_{n-1}(alpha)^2)

``T_n`` is unchanged by ``theta -> -theta`` and ``theta -> 1/theta``, so the
resonance, pass-band and envelope routines work with the canonical
``theta in (0, 1]``.
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from .chebyshev import chebyshev_u_pair
from .errors import DomainError
from .transfer import Amplitudes

# T_n <= SMALL_THETA_CONSTANT theta^{2n} / |cos k|^{2(n-1)} holds whenever
# alpha^2 >= n - 1 and theta <= 1/2 (see small_theta_bound).
SMALL_THETA_CONSTANT = 20.0


def _theta_value(theta):
    th = float(getattr(theta, "theta", theta))
    if th == 0.0 or not math.isfinite(th):
        raise DomainError("degenerate contrast: theta must be finite and non-zero")
    return th


def _positive_n(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return int(n)


def canonical_theta(theta):
    """Map theta to ``min(|theta|, 1/|theta|)`` in ``(0, 1]``."""
    th = abs(_theta_value(theta))
    return min(th, 1.0 / th)


def chebyshev_argument(theta, k):
    th = _theta_value(theta)
    return (1.0 + th * th) / (2.0 * th) * np.cos(k)


def transmission_closed_form(theta, k, n):
    """``T_n(theta, k)``; ``k`` may be an array."""
    th = _theta_value(theta)
    n = _positive_n(n)
    s = (1.0 - th * th) / (2.0 * th)
    u, _ = chebyshev_u_pair(n, chebyshev_argument(th, k))
    with np.errstate(over="ignore"):
        return 1.0 / (1.0 + (s * u) ** 2)


def amplitudes_closed_form(theta, k, n):
    th = _theta_value(theta)
    n = _positive_n(n)
    k = float(k)
    c = (1.0 + th * th) / (2.0 * th)
    s = (1.0 - th * th) / (2.0 * th)
    u1, u2 = chebyshev_u_pair(n, c * math.cos(k))
    inv_t = c * u1 * cmath.exp(1j * (n - 1) * k) - u2 * cmath.exp(1j * n * k)
    r_over_t = s * u1 * cmath.exp(1j * (n - 1) * k)
    t = 1.0 / inv_t
    return Amplitudes(t, r_over_t * t)


@dataclass(frozen=True)
class ResonanceSet:
    points: tuple
    n: int
    theta: float

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def resonances(theta, n):
    """Points ``k_j`` in ``(0, pi)`` where ``T_n = 1``, ascending.

    ``cos k_j = 2 theta / (theta^2 + 1) * cos(pi j / n)``. Theta is
    canonicalised first; theta = +-1 and ``n < 2`` give an empty set.
    """
    th = canonical_theta(theta)
    n = _positive_n(n)
    if n < 2 or th == 1.0:
        return ResonanceSet((), n, th)
    g = 2.0 * th / (th * th + 1.0)
    lower = [math.acos(g * math.cos(math.pi * j / n)) for j in range(1, (n - 1) // 2 + 1)]
    middle = [math.pi / 2] if n % 2 == 0 else []
    upper = [math.pi - kj for kj in reversed(lower)]
    return ResonanceSet(tuple(lower + middle + upper), n, th)


def refine_resonance(theta, n, k_guess, half_width=1e-3, tol=1e-12):
    """Golden-section maximisation of ``T_n`` near ``k_guess``."""
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = k_guess - half_width, k_guess + half_width
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc = transmission_closed_form(theta, c, n)
    fd = transmission_closed_form(theta, d, n)
    while b - a > tol:
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = transmission_closed_form(theta, c, n)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = transmission_closed_form(theta, d, n)
    return 0.5 * (a + b)


@dataclass(frozen=True)
class Passband:
    lo: float
    hi: float

    def __contains__(self, k):
        return self.lo < k < self.hi


def _open_unit(theta, what):
    th = float(theta)
    if not 0.0 < th < 1.0:
        raise DomainError(f"{what} needs theta in (0, 1), got {theta!r}")
    return th


def passband(theta):
    th = _open_unit(theta, "passband")
    lo = math.pi / 2 - math.asin(2.0 * th / (th * th + 1.0))
    return Passband(lo, math.pi - lo)


def envelope(theta, k):
    """``inf_n T_n(theta, k)``: positive on the pass-band, 0 elsewhere."""
    th = _open_unit(theta, "envelope")
    band = passband(th)
    k = np.asarray(k, dtype=np.float64)
    ratio = ((th * th - 1.0) / (th * th + 1.0)) ** 2
    inside = (k > band.lo) & (k < band.hi)
    sin2 = np.where(inside, np.sin(k) ** 2, 1.0)
    out = np.where(inside, 1.0 - ratio / sin2, 0.0)
    out = np.maximum(out, 0.0)
    return float(out) if out.ndim == 0 else out


def small_theta_regime(theta, k, n):
    """True where :func:`small_theta_bound` is guaranteed: ``alpha^2 >= n - 1``."""
    return chebyshev_argument(theta, k) ** 2 >= n - 1


def small_theta_bound(theta, k, n):
    """Upper bound ``c theta^{2n} / |cos k|^{2(n-1)}`` on ``T_n`` as theta -> 0.

    ``c = 20``. The bound holds for ``theta <= 1/2`` once the Chebyshev
    argument satisfies ``alpha^2 >= n - 1`` (roughly
    ``theta <= |cos k| / (2 sqrt(n - 1))``): there
    ``U_{n-1}(alpha) >= (2 alpha)^{n-1} / 2``, giving
    ``T_n <= 16 theta^{2n} / ((1 - theta^4)^2 |cos k|^{2(n-1)})``.
    """
    th = float(theta)
    if not 0.0 < th <= 0.5:
        raise DomainError(f"small-theta bound needs theta in (0, 0.5], got {theta!r}")
    n = _positive_n(n)
    d = abs(math.cos(k))
    if d < 1e-8:
        raise DomainError("bound degenerate at band center (cos k = 0)")
    return SMALL_THETA_CONSTANT * th ** (2 * n) / d ** (2 * (n - 1))


def theta_to_one_bound(theta, n):
    """``4 n^2 (1 - theta)^2``, an upper bound on ``1 - T_n`` for theta near 1."""
    th = float(theta)
    if not 0.9 < th < 1.1:
        raise DomainError(f"theta-to-one bound needs theta in (0.9, 1.1), got {theta!r}")
    n = _positive_n(n)
    return 4.0 * n * n * (1.0 - th) ** 2
