"""numba-compiled twins of the kernels in ``_numpy``.

Same signatures and results, without numpy's per-step temporaries. ``nogil`` lets the CLI thread pool run them
concurrently.
"""
import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _cheb_u_pair_flat(n, x):
    # recurrence step outermost so the inner loop over points vectorises
    m = x.shape[0]
    two_x = 2.0 * x
    cur = np.ones(m)
    prev = np.zeros(m)
    for _ in range(n - 1):
        for j in range(m):
            nxt = two_x[j] * cur[j] - prev[j]
            prev[j] = cur[j]
            cur[j] = nxt
    return cur, prev


def cheb_u_pair(n, x):
    x = np.asarray(x, dtype=np.float64)
    cur, prev = _cheb_u_pair_flat(n, np.ascontiguousarray(x.ravel()))
    return cur.reshape(x.shape), prev.reshape(x.shape)


@njit(cache=True, nogil=True)
def _su11_chain(z1, z2):
    nf, m = z1.shape
    p1 = z1[0].copy()
    p2 = z2[0].copy()
    for j in range(1, nf):
        for i in range(m):
            a = z1[j, i]
            b = z2[j, i]
            n1 = a * p1[i] + b.conjugate() * p2[i]
            p2[i] = b * p1[i] + a.conjugate() * p2[i]
            p1[i] = n1
    return p1, p2


def su11_chain(z1, z2):
    return _su11_chain(np.ascontiguousarray(z1, dtype=np.complex128),
                       np.ascontiguousarray(z2, dtype=np.complex128))


@njit(cache=True, nogil=True)
def _rk4_fundamental(vnodes, energies, h):
    m = energies.shape[0]
    nsteps = (vnodes.shape[0] - 1) // 2
    out = np.empty((4, m))
    half = 0.5 * h
    sixth = h / 6.0
    for j in range(m):
        e = energies[j]
        y1 = 1.0
        y1p = 0.0
        y2 = 0.0
        y2p = 1.0
        for i in range(nsteps):
            q0 = vnodes[2 * i] - e
            qh = vnodes[2 * i + 1] - e
            q1 = vnodes[2 * i + 2] - e
            k1y = y1p
            k1p = q0 * y1
            l1y = y2p
            l1p = q0 * y2
            k2y = y1p + half * k1p
            k2p = qh * (y1 + half * k1y)
            l2y = y2p + half * l1p
            l2p = qh * (y2 + half * l1y)
            k3y = y1p + half * k2p
            k3p = qh * (y1 + half * k2y)
            l3y = y2p + half * l2p
            l3p = qh * (y2 + half * l2y)
            k4y = y1p + h * k3p
            k4p = q1 * (y1 + h * k3y)
            l4y = y2p + h * l3p
            l4p = q1 * (y2 + h * l3y)
            y1 = y1 + sixth * (k1y + 2.0 * k2y + 2.0 * k3y + k4y)
            y1p = y1p + sixth * (k1p + 2.0 * k2p + 2.0 * k3p + k4p)
            y2 = y2 + sixth * (l1y + 2.0 * l2y + 2.0 * l3y + l4y)
            y2p = y2p + sixth * (l1p + 2.0 * l2p + 2.0 * l3p + l4p)
        out[0, j] = y1
        out[1, j] = y1p
        out[2, j] = y2
        out[3, j] = y2p
    return out


def rk4_fundamental(vnodes, energies, h):
    return _rk4_fundamental(np.ascontiguousarray(vnodes, dtype=np.float64),
                            np.ascontiguousarray(energies, dtype=np.float64).ravel(),
                            float(h))
