"""Vectorised numpy implementations of the hot loops.

Each function loops over the short axis (recurrence order, comb sites,
RK4 steps) in Python and vectorises over the long axis (grid points).
"""
import numpy as np


def cheb_u_pair(n, x):
    x = np.asarray(x, dtype=np.float64)
    prev = np.zeros_like(x)
    cur = np.ones_like(x)
    two_x = 2.0 * x
    # overflow to inf/nan is left for callers to detect, as in the numba kernel
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(n - 1):
            prev, cur = cur, two_x * cur - prev
    return cur, prev


def su11_chain(z1, z2):
    # factor 0 acts first, i.e. the product is F[n-1] ... F[1] F[0]
    p1 = z1[0].copy()
    p2 = z2[0].copy()
    for j in range(1, z1.shape[0]):
        a = z1[j]
        b = z2[j]
        p1, p2 = a * p1 + np.conj(b) * p2, b * p1 + np.conj(a) * p2
    return p1, p2


def rk4_fundamental(vnodes, energies, h):
    energies = np.asarray(energies, dtype=np.float64)
    y1 = np.ones_like(energies)
    y1p = np.zeros_like(energies)
    y2 = np.zeros_like(energies)
    y2p = np.ones_like(energies)
    nsteps = (vnodes.shape[0] - 1) // 2
    half = 0.5 * h
    for i in range(nsteps):
        q0 = vnodes[2 * i] - energies
        qh = vnodes[2 * i + 1] - energies
        q1 = vnodes[2 * i + 2] - energies
        # w'' = q w, applied to both solutions at once
        k1y, k1p = y1p, q0 * y1
        l1y, l1p = y2p, q0 * y2
        k2y, k2p = y1p + half * k1p, qh * (y1 + half * k1y)
        l2y, l2p = y2p + half * l1p, qh * (y2 + half * l1y)
        k3y, k3p = y1p + half * k2p, qh * (y1 + half * k2y)
        l3y, l3p = y2p + half * l2p, qh * (y2 + half * l2y)
        k4y, k4p = y1p + h * k3p, q1 * (y1 + h * k3y)
        l4y, l4p = y2p + h * l3p, q1 * (y2 + h * l3y)
        y1 = y1 + h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
        y1p = y1p + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
        y2 = y2 + h / 6.0 * (l1y + 2.0 * l2y + 2.0 * l3y + l4y)
        y2p = y2p + h / 6.0 * (l1p + 2.0 * l2p + 2.0 * l3p + l4p)
    return np.stack([y1, y1p, y2, y2p])
