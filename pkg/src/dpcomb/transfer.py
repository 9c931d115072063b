"""SU(1,1) transfer matrices for delta'_theta point interactions.

A transfer matrix maps the plane-wave coefficients ``(alpha_1, alpha_2)``
of ``alpha_1 e^{ikx} + alpha_2 e^{-ikx}`` on the left of an interaction to
those on the right. Every matrix here has the form
``[[z1, conj(z2)], [z2, conj(z1)]]`` with ``|z1|^2 - |z2|^2 = 1``, so only
``(z1, z2)`` is stored.
"""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, NumericalCorruptionError

OVERFLOW_LIMIT = 1e150


@dataclass(frozen=True)
class Contrast:
    """Interface parameter theta of a delta'_theta interaction."""

    theta: float

    def __post_init__(self):
        t = float(self.theta)
        if t == 0.0:
            raise DomainError("degenerate contrast: theta must be non-zero")
        if not math.isfinite(t):
            raise DomainError("contrast must be finite")
        object.__setattr__(self, "theta", t)

    @property
    def kappa(self):
        """``ln|theta|``; ``cosh``/``sinh`` of it give the matrix entries for theta > 0."""
        return math.log(abs(self.theta))


def as_contrast(theta):
    return theta if isinstance(theta, Contrast) else Contrast(theta)


@dataclass(frozen=True)
class TransferMatrix:
    z1: complex
    z2: complex

    def as_array(self):
        return np.array([[self.z1, self.z2.conjugate()],
                         [self.z2, self.z1.conjugate()]], dtype=complex)

    @classmethod
    def from_array(cls, m, tol=1e-8):
        """Build from a full 2x2 array, checking the conjugate structure."""
        m = np.asarray(m, dtype=complex)
        z1, z2 = complex(m[0, 0]), complex(m[1, 0])
        scale = max(1.0, abs(z1))
        if abs(m[0, 1] - z2.conjugate()) > tol * scale or abs(m[1, 1] - z1.conjugate()) > tol * scale:
            raise NumericalCorruptionError("matrix does not have SU(1,1) structure")
        return cls(z1, z2)

    def __matmul__(self, other):
        if not isinstance(other, TransferMatrix):
            return NotImplemented
        a, b = self.z1, self.z2
        c, d = other.z1, other.z2
        return TransferMatrix(a * c + b.conjugate() * d, b * c + a.conjugate() * d)

    def su11_defect(self):
        return abs(abs(self.z1) ** 2 - abs(self.z2) ** 2 - 1.0)

    def conjugate(self):
        return TransferMatrix(self.z1.conjugate(), self.z2.conjugate())

    def __neg__(self):
        return TransferMatrix(-self.z1, -self.z2)

    def distance(self, other):
        """Largest entrywise modulus of ``self - other``."""
        return max(abs(self.z1 - other.z1), abs(self.z2 - other.z2))


IDENTITY = TransferMatrix(1 + 0j, 0j)


@dataclass(frozen=True)
class Amplitudes:
    """Left transmission and reflection amplitudes."""

    t: complex
    r: complex

    @property
    def transmission(self):
        return abs(self.t) ** 2

    @property
    def reflection(self):
        return abs(self.r) ** 2


@dataclass(frozen=True)
class CombSpec:
    """``n`` interactions with contrast ``theta`` at ``0, h, ..., (n-1) h``."""

    n: int
    theta: Contrast
    h: float = 1.0

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise DomainError(f"number of interactions must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "theta", as_contrast(self.theta))
        if not self.h > 0 or not math.isfinite(self.h):
            raise DomainError("spacing h must be positive and finite")
        object.__setattr__(self, "h", float(self.h))


def single_matrix(theta, z):
    """Transfer matrix of one interaction at a point ``a`` with ``z = a k``."""
    th = as_contrast(theta).theta
    p = th * th
    return TransferMatrix(complex((p + 1.0) / (2.0 * th)),
                          (p - 1.0) / (2.0 * th) * cmath.exp(2j * z))


def _guard(m):
    if not (abs(m.z1) < OVERFLOW_LIMIT):
        raise NumericalCorruptionError("transfer-matrix product overflowed")
    return m


def comb_matrix(spec, k):
    """Ordered product ``M(theta,(n-1)k) ... M(theta,k) M(theta,0)``.

    Spacing enters only through ``k_eff = h k``.
    """
    k_eff = spec.h * k
    m = single_matrix(spec.theta, 0.0)
    for j in range(1, spec.n):
        m = single_matrix(spec.theta, j * k_eff) @ m
    return _guard(m)


def inverse(m):
    return TransferMatrix(m.z1.conjugate(), -m.z2)


def amplitudes_from_matrix(m):
    lower_right = m.z1.conjugate()
    if abs(lower_right) < 1.0 - 1e-8:
        raise NumericalCorruptionError(
            f"|M22| = {abs(lower_right):.3g} < 1 is impossible for an SU(1,1) matrix")
    t = 1.0 / lower_right
    return Amplitudes(t, -t * m.z2)


def comb_matrix_grid(theta, n, k, h=1.0):
    """Vectorised :func:`comb_matrix` over an array of ``k``; returns ``(z1, z2)``."""
    th = as_contrast(theta).theta
    spec_n = CombSpec(n, th, h).n
    k_eff = h * np.atleast_1d(np.asarray(k, dtype=np.float64))
    p = th * th
    j = np.arange(spec_n, dtype=np.float64)[:, None]
    z1 = np.full((spec_n, k_eff.size), (p + 1.0) / (2.0 * th), dtype=np.complex128)
    z2 = (p - 1.0) / (2.0 * th) * np.exp(2j * j * k_eff[None, :])
    p1, p2 = kernels.su11_chain(z1, z2)
    if not np.all(np.abs(p1) < OVERFLOW_LIMIT):
        raise NumericalCorruptionError("transfer-matrix product overflowed")
    return p1, p2


def transmission_from_products(theta, n, k, h=1.0):
    """``|t|^2 = 1 / |z1|^2`` of the comb product on a grid of ``k``."""
    z1, _ = comb_matrix_grid(theta, n, k, h)
    return 1.0 / np.abs(z1) ** 2
