"""Adaptive Simpson quadrature."""
import math


def adaptive_simpson(f, a, b, tol=1e-10, max_depth=60):
    """Integrate scalar ``f`` over ``[a, b]`` to absolute tolerance ``tol``.

    Intervals are bisected until the two-panel and one-panel Simpson
    estimates differ by less than ``15 tol`` (scaled per panel); accepted
    panels carry the Richardson correction ``(S2 - S1) / 15``.
    """
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    total = 0.0
    # explicit stack: (a, b, fa, fm, fb, estimate, tol, depth)
    stack = [(a, b, fa, fm, fb, whole, tol, 0)]
    while stack:
        lo, hi, flo, fmid, fhi, est, eps, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - est
        if depth >= max_depth or abs(delta) <= 15.0 * eps:
            total += left + right + delta / 15.0
        else:
            stack.append((lo, mid, flo, flm, fmid, left, 0.5 * eps, depth + 1))
            stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * eps, depth + 1))
    if not math.isfinite(total):
        raise ArithmeticError("integrand produced a non-finite value")
    return total
