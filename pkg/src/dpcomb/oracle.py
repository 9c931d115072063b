"""Brute-force transfer matrices from direct integration of the ODE.

Across one dipole the stationary equation
``-y'' + eps^-2 V((x - x0)/eps) y = k^2 y`` becomes, in ``xi = (x - x0)/eps``,

    -w'' + V(xi) w = (eps k)^2 w,   xi in [-1, 1],

which has an O(1) potential on a fixed interval: there is no eps^-2
stiffness left. The fundamental pair from ``(w, w') = (1, 0)`` and
``(0, 1)`` at ``xi = -1`` is integrated with fixed-step RK4, halving the
step until two successive results agree to 1e-10 and the Wronskian is 1
to 1e-10. Nothing here uses the closed-form matrices.
"""
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, IntegrationError, NumericalCorruptionError
from .transfer import OVERFLOW_LIMIT, TransferMatrix

TOLERANCE = 1e-10
INITIAL_STEPS = 64
MAX_HALVINGS = 20
SU11_TOL = 1e-8


@dataclass(frozen=True)
class FundamentalPair:
    """Values at ``xi = 1`` of the solutions started from (1, 0) and (0, 1)."""

    y1: float
    y1p: float
    y2: float
    y2p: float
    steps: int = 0

    @property
    def wronskian(self):
        return self.y1 * self.y2p - self.y1p * self.y2


def _nodes(potential, nsteps):
    # RK4 needs V at every half step
    return np.asarray(potential.v(np.linspace(-1.0, 1.0, 2 * nsteps + 1)), dtype=np.float64)


def fundamental_pairs(potential, energies, tol=TOLERANCE):
    """Integrate for every energy ``(eps k)^2`` in ``energies``.

    Returns ``(values, steps)``: ``values`` has shape ``(4, m)`` with rows
    ``y1, y1p, y2, y2p``. Each point keeps the first result that passes
    the tolerance, so a point's value does not depend on what else is in
    the batch.
    """
    energies = np.atleast_1d(np.asarray(energies, dtype=np.float64))
    m = energies.size
    result = np.empty((4, m))
    steps = np.zeros(m, dtype=np.int64)
    pending = np.arange(m)
    nsteps = INITIAL_STEPS
    prev = kernels.rk4_fundamental(_nodes(potential, nsteps), energies, 2.0 / nsteps)
    for _ in range(MAX_HALVINGS):
        if pending.size == 0:
            break
        nsteps *= 2
        cur = kernels.rk4_fundamental(_nodes(potential, nsteps), energies[pending], 2.0 / nsteps)
        scale = np.maximum(1.0, np.max(np.abs(cur), axis=0))
        change = np.max(np.abs(cur - prev), axis=0) / scale
        wronskian = np.abs(cur[0] * cur[3] - cur[1] * cur[2] - 1.0)
        done = (change < tol) & (wronskian < tol)
        result[:, pending[done]] = cur[:, done]
        steps[pending[done]] = nsteps
        pending = pending[~done]
        prev = cur[:, ~done]
    if pending.size:
        raise IntegrationError(
            f"RK4 did not converge to {tol:g} after {MAX_HALVINGS} step halvings")
    return result, steps


def integrate_dipole(potential, k, epsilon):
    if not epsilon > 0:
        raise DomainError("epsilon must be positive")
    values, steps = fundamental_pairs(potential, [(epsilon * k) ** 2])
    return FundamentalPair(*values[:, 0].tolist(), steps=int(steps[0]))


def _plane_wave_entries(values, x0, k, epsilon):
    """Entries ``(m00, m01, m10, m11)`` of the plane-wave transfer matrix.

    With ``A(x) = [[e^{ikx}, e^{-ikx}], [e^{ikx}, -e^{-ikx}]]`` (second row
    is the derivative divided by ``ik``) the matching conditions at
    ``x0 +- eps`` give ``M = A(x0+eps)^-1 G A(x0-eps)`` where ``G`` is the
    fundamental matrix in the same scaled basis. ``k = 0`` takes the limit
    ``G = diag(y1, y2p)``.
    """
    y1, y1p, y2, y2p = values
    k = np.asarray(k, dtype=np.float64)
    ike = 1j * k * epsilon
    zero = k == 0.0
    safe = np.where(zero, 1.0, ike)
    g00 = y1 + 0j
    g01 = np.where(zero, 0.0, ike * y2)
    g10 = np.where(zero, 0.0, y1p / safe)
    g11 = y2p + 0j
    em = np.exp(1j * k * (x0 - epsilon))
    em_inv = 1.0 / em
    ep_inv = np.exp(-1j * k * (x0 + epsilon))
    ep = 1.0 / ep_inv
    # G A(x0 - eps)
    b00 = (g00 + g01) * em
    b01 = (g00 - g01) * em_inv
    b10 = (g10 + g11) * em
    b11 = (g10 - g11) * em_inv
    # A(x0 + eps)^-1 = 1/2 [[e^{-ik(x0+eps)}, e^{-ik(x0+eps)}], [e^{ik(x0+eps)}, -e^{ik(x0+eps)}]]
    m00 = 0.5 * ep_inv * (b00 + b10)
    m01 = 0.5 * ep_inv * (b01 + b11)
    m10 = 0.5 * ep * (b00 - b10)
    m11 = 0.5 * ep * (b01 - b11)
    return m00, m01, m10, m11


def dipole_matrix_numeric(potential, x0, k, epsilon):
    if k == 0:
        raise DomainError("plane-wave basis degenerate at k = 0")
    pair = integrate_dipole(potential, k, epsilon)
    values = np.array([pair.y1, pair.y1p, pair.y2, pair.y2p])
    m00, m01, m10, m11 = (complex(e) for e in _plane_wave_entries(values, x0, k, epsilon))
    m = TransferMatrix.from_array([[m00, m01], [m10, m11]], tol=SU11_TOL)
    if m.su11_defect() > SU11_TOL:
        raise IntegrationError(f"numerical transfer matrix leaves SU(1,1): defect {m.su11_defect():.3g}")
    return m


def array_matrices_numeric(spec, k):
    """``(z1, z2)`` of the whole dipole array for every ``k`` in an array.

    ``k = 0`` is allowed and uses the zero-energy limit of the matching.
    """
    k = np.atleast_1d(np.asarray(k, dtype=np.float64))
    eps = spec.epsilon
    values, _ = fundamental_pairs(spec.potential, (eps * k) ** 2)
    z1 = np.empty((spec.n, k.size), dtype=np.complex128)
    z2 = np.empty((spec.n, k.size), dtype=np.complex128)
    for j, x0 in enumerate(spec.sites):
        m00, _, m10, _ = _plane_wave_entries(values, x0, k, eps)
        z1[j] = m00
        z2[j] = m10
    p1, p2 = kernels.su11_chain(z1, z2)
    if not np.all(np.abs(p1) < OVERFLOW_LIMIT):
        raise NumericalCorruptionError("transfer-matrix product overflowed")
    return p1, p2


def array_transmission_numeric_grid(spec, k):
    p1, _ = array_matrices_numeric(spec, k)
    return 1.0 / np.abs(p1) ** 2


def array_transmission_numeric(spec, k):
    return float(array_transmission_numeric_grid(spec, [k])[0])
