"""Resonant potentials and regularised (finite-epsilon) dipole arrays.

A compactly supported potential ``V = u''/u`` on ``[-1, 1]`` built from a
positive half-bound state ``u`` with ``u(-1) = 1``, ``u(1) = theta`` and
``u'(+-1) = 0`` has a zero-energy resonance. The scaled dipole
``eps^-2 V((x - x0)/eps)`` then has the closed-form transfer matrix of
:func:`dipole_matrix_analytic`, which depends on ``V`` only through
``theta`` and ``eta = theta^2 * int_{-1}^{1} u^-2``.

Note that this matrix is obtained by matching the zero-energy solutions
``u`` and ``v`` across the dipole. It tends to the ideal delta'_theta matrix
as ``eps -> 0`` but differs from the exact finite-eps transfer matrix
(see :mod:`dpcomb.oracle`) at first order in ``eps k``.
"""
import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.interpolate import CubicSpline

from . import kernels
from .errors import ConstructionError, DomainError, NumericalCorruptionError
from .quadrature import adaptive_simpson
from .transfer import OVERFLOW_LIMIT, TransferMatrix

ETA_TOL = 1e-10
POSITIVITY_SAMPLES = 4096
MIN_SAMPLES = 64
FLATNESS_TOL = 1e-6
FILE_HEADER = "# half-bound-state v1"


@dataclass(frozen=True)
class ResonantPotential:
    """Half-bound state ``u`` on [-1, 1] and its potential ``v = u''/u``.

    ``u``, ``du`` and ``v`` are numpy-vectorised callables. Outside [-1, 1]
    ``u`` is constant (1 on the left, theta on the right) and ``v`` is 0.
    """

    u: Callable
    du: Callable
    v: Callable
    theta: float
    eta: float
    label: str = field(default="custom", compare=False)

    def companion(self, x):
        """Second solution ``u(x) int_{-1}^x u^-2`` and its derivative at scalar ``x``."""
        x = min(max(float(x), -1.0), 1.0)
        integral = adaptive_simpson(lambda s: float(self.u(s)) ** -2, -1.0, x, ETA_TOL) if x > -1.0 else 0.0
        ux, dux = float(self.u(x)), float(self.du(x))
        return ux * integral, dux * integral + 1.0 / ux


def _eta(theta, u):
    return theta * theta * adaptive_simpson(lambda s: float(u(s)) ** -2, -1.0, 1.0, ETA_TOL)


def _inside(x):
    return (x >= -1.0) & (x <= 1.0)


def example_potential(theta):
    """The quartic family ``u_theta`` with its potential ``V_theta``.

    ``u = (x+1)^2 (4x^2 - (theta+7)x + 2(theta+1)) / 4 + 1`` on [-1, 1].
    """
    th = float(theta)
    if th == 0.0 or not math.isfinite(th):
        raise DomainError("theta must be finite and non-zero")

    def quad(x):
        return 4.0 * x * x - (th + 7.0) * x + 2.0 * (th + 1.0)

    def u(x):
        x = np.asarray(x, dtype=np.float64)
        inner = 0.25 * (x + 1.0) ** 2 * quad(x) + 1.0
        return np.where(x < -1.0, 1.0, np.where(x > 1.0, th, inner))

    def du(x):
        x = np.asarray(x, dtype=np.float64)
        inner = 0.5 * (x + 1.0) * quad(x) + 0.25 * (x + 1.0) ** 2 * (8.0 * x - (th + 7.0))
        return np.where(_inside(x), inner, 0.0)

    def v(x):
        x = np.asarray(x, dtype=np.float64)
        num = 48.0 * x * x + 6.0 * (1.0 - th) * x - 16.0
        den = (x + 1.0) ** 2 * quad(x) + 4.0
        return np.where(_inside(x), num / den, 0.0)

    grid = np.linspace(-1.0, 1.0, POSITIVITY_SAMPLES)
    if np.min(u(grid)) <= 0.0:
        raise ConstructionError(f"half-bound state not positive for theta={th}")
    return ResonantPotential(u, du, v, th, _eta(th, u), label=f"example(theta={th!r})")


def _endpoint_slope(x, y):
    # degree-4 fit through five samples, differentiated at x[0]: exact for quartics
    coeffs = np.polyfit(x - x[0], y, 4)
    return np.polyval(np.polyder(coeffs), 0.0)


def custom_potential(x, u=None):
    """Build a :class:`ResonantPotential` from samples of ``u`` on [-1, 1].

    Accepts either two arrays or a single ``(m, 2)`` array of ``(x, u)``
    rows. At least 64 samples are needed; ``u`` is rescaled so that
    ``u(-1) = 1`` and must be flat (slope below 1e-6) at both ends. ``v`` is
    the clamped cubic spline's second derivative over its value, accurate
    to ``O(h^2)`` in the sample spacing.
    """
    if u is None:
        data = np.asarray(x, dtype=np.float64)
        if data.ndim != 2 or data.shape[1] != 2:
            raise ConstructionError("expected an (m, 2) array of (x, u) samples")
        x, u = data[:, 0], data[:, 1]
    x = np.asarray(x, dtype=np.float64)
    u = np.asarray(u, dtype=np.float64)
    if x.shape != u.shape or x.ndim != 1:
        raise ConstructionError("x and u must be 1-D arrays of equal length")
    if x.size < MIN_SAMPLES:
        raise ConstructionError(f"need at least {MIN_SAMPLES} samples, got {x.size}")
    if not np.all(np.diff(x) > 0):
        raise ConstructionError("sample abscissae must be strictly increasing")
    if abs(x[0] + 1.0) > 1e-12 or abs(x[-1] - 1.0) > 1e-12:
        raise ConstructionError("samples must span exactly [-1, 1]")
    if not np.all(np.isfinite(u)) or np.min(u) <= 0.0:
        raise ConstructionError("half-bound state samples must be positive")
    u = u / u[0]
    left = _endpoint_slope(x[:5], u[:5])
    right = _endpoint_slope(x[:-6:-1], u[:-6:-1])
    if abs(left) > FLATNESS_TOL or abs(right) > FLATNESS_TOL:
        raise ConstructionError(
            f"not a half-bound state: endpoint slopes {left:.3g}, {right:.3g} exceed {FLATNESS_TOL}")

    spline = CubicSpline(x, u, bc_type="clamped")
    d1, d2 = spline.derivative(1), spline.derivative(2)
    th = float(u[-1])

    def u_fn(s):
        s = np.asarray(s, dtype=np.float64)
        return np.where(s < -1.0, 1.0, np.where(s > 1.0, th, spline(np.clip(s, -1.0, 1.0))))

    def du_fn(s):
        s = np.asarray(s, dtype=np.float64)
        return np.where(_inside(s), d1(np.clip(s, -1.0, 1.0)), 0.0)

    def v_fn(s):
        s = np.asarray(s, dtype=np.float64)
        c = np.clip(s, -1.0, 1.0)
        return np.where(_inside(s), d2(c) / spline(c), 0.0)

    if np.min(u_fn(np.linspace(-1.0, 1.0, POSITIVITY_SAMPLES))) <= 0.0:
        raise ConstructionError("interpolated half-bound state is not positive")
    return ResonantPotential(u_fn, du_fn, v_fn, th, _eta(th, u_fn))


def write_potential(path, x, u):
    """Write samples in the two-column ``x u(x)`` exchange format."""
    x = np.asarray(x, dtype=np.float64)
    u = np.asarray(u, dtype=np.float64)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(FILE_HEADER + "\n")
        for xi, ui in zip(x, u):
            fh.write(f"{xi:.17g} {ui:.17g}\n")


def read_potential_samples(path):
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0].strip() != FILE_HEADER:
        raise ConstructionError(f"{path}: missing header line {FILE_HEADER!r}")
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ConstructionError(f"{path}:{lineno}: expected two columns")
        rows.append((float(parts[0]), float(parts[1])))
    data = np.array(rows, dtype=np.float64).reshape(-1, 2)
    return data[:, 0], data[:, 1]


def load_potential(path):
    return custom_potential(*read_potential_samples(path))


@dataclass(frozen=True)
class DipoleArraySpec:
    """``n`` scaled dipoles ``eps^-2 V((x - j*spacing)/eps)``, j = 0..n-1."""

    potential: ResonantPotential
    n: int
    epsilon: float
    spacing: float = 1.0

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if not self.spacing > 0:
            raise DomainError("spacing must be positive")
        if not 0.0 < self.epsilon < self.spacing / 2.0:
            raise DomainError(
                f"epsilon must lie in (0, spacing/2) so dipole supports do not overlap; got {self.epsilon}")

    @property
    def sites(self):
        return self.spacing * np.arange(self.n, dtype=np.float64)


def dipole_matrix_analytic(theta, eta, x0, k, epsilon):
    th = float(theta)
    if th == 0.0:
        raise DomainError("degenerate contrast: theta must be non-zero")
    if not epsilon > 0:
        raise DomainError("epsilon must be positive")
    p = th * th
    a = 1j * epsilon * k * eta
    z1 = (p + 1.0 + a) * cmath.exp(-2j * epsilon * k) / (2.0 * th)
    z2 = (p - 1.0 + a) * cmath.exp(2j * k * x0) / (2.0 * th)
    return TransferMatrix(z1, z2)


def regularized_comb_matrix(spec, k):
    pot = spec.potential
    m = None
    for x0 in spec.sites:
        f = dipole_matrix_analytic(pot.theta, pot.eta, float(x0), k, spec.epsilon)
        m = f if m is None else f @ m
    if not abs(m.z1) < OVERFLOW_LIMIT:
        raise NumericalCorruptionError("transfer-matrix product overflowed")
    return m


def regularized_transmission(spec, k):
    m = regularized_comb_matrix(spec, k)
    return 1.0 / abs(m.z1) ** 2


def regularized_transmission_grid(spec, k):
    """Vectorised :func:`regularized_transmission` over an array of ``k``."""
    pot = spec.potential
    th, eps = pot.theta, spec.epsilon
    k = np.atleast_1d(np.asarray(k, dtype=np.float64))
    p = th * th
    a = 1j * eps * k * pot.eta
    z1_row = (p + 1.0 + a) * np.exp(-2j * eps * k) / (2.0 * th)
    z1 = np.broadcast_to(z1_row, (spec.n, k.size))
    z2 = (p - 1.0 + a)[None, :] * np.exp(2j * spec.sites[:, None] * k[None, :]) / (2.0 * th)
    p1, _ = kernels.su11_chain(z1, z2)
    return 1.0 / np.abs(p1) ** 2
