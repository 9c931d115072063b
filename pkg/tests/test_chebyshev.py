import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dpcomb.chebyshev import chebyshev_u, chebyshev_u_pair


@pytest.mark.parametrize("n, x, expected", [
    (0, 0.7, 1.0),
    (1, 0.7, 1.4),
    (3, 1.0, 4.0),
    (2, 2.0, 15.0),
    (3, -1.0, -4.0),
])
def test_small_orders(n, x, expected):
    assert chebyshev_u(n, x) == expected


def test_u7_matches_trig_form():
    # sin(8 phi) / sin(phi) at phi = arccos(0.3141), 40-digit mpmath
    assert chebyshev_u(7, 0.3141) == pytest.approx(-0.5820964888929981622, rel=1e-14)


@pytest.mark.parametrize("n, x, expected", [
    (1, 0.5, (1.0, 0.0)),
    (3, 0.5, (0.0, 1.0)),
])
def test_pair_trivial(n, x, expected):
    assert chebyshev_u_pair(n, x) == expected


def test_pair_against_exact_rationals():
    x = Fraction(6, 5)
    u = [Fraction(1), 2 * x]
    for _ in range(3):
        u.append(2 * x * u[-1] - u[-2])
    assert u[3] == Fraction(1128, 125) and u[4] == Fraction(10561, 625)
    hi, lo = chebyshev_u_pair(5, 1.2)
    assert hi == pytest.approx(float(u[4]), rel=1e-15)
    assert lo == pytest.approx(float(u[3]), rel=1e-15)


def test_pair_rejects_n_zero():
    with pytest.raises(ValueError):
        chebyshev_u_pair(0, 0.3)
    with pytest.raises(ValueError):
        chebyshev_u(-1, 0.3)


def test_scalar_and_array_paths_agree(backend):
    xs = np.linspace(-3, 3, 101)
    for n in (0, 1, 5, 17):
        np.testing.assert_array_equal(chebyshev_u(n, xs), [chebyshev_u(n, x) for x in xs])


def test_product_identity(backend):
    # U_{n-1}^2 - U_{n-2} U_n = 1
    xs = np.random.default_rng(1).uniform(-3, 3, 200)
    for n in range(1, 51):
        u_nm1, u_nm2 = chebyshev_u_pair(n, xs)
        u_n = chebyshev_u(n, xs)
        lhs = u_nm1 ** 2 - u_nm2 * u_n
        scale = np.maximum(1.0, u_nm1 ** 2)
        assert np.max(np.abs(lhs - 1.0) / scale) < 1e-9


@pytest.mark.parametrize("n", range(2, 21))
def test_roots(n):
    for j in range(1, n):
        assert abs(chebyshev_u(n - 1, math.cos(math.pi * j / n))) < 1e-12


@given(st.floats(1e-6, math.pi - 1e-6), st.integers(0, 200))
def test_trig_consistency(phi, n):
    x = math.cos(phi)
    if abs(x) > 1 - 1e-6:
        return
    assert abs(math.sin(phi) * chebyshev_u(n, x) - math.sin((n + 1) * phi)) <= max(n, 1) * 1e-13


def test_growth_outside_unit_interval_is_accurate():
    # U_n(cosh a) = sinh((n+1) a) / sinh(a)
    a = 0.8
    for n in (10, 100, 400):
        ref = math.sinh((n + 1) * a) / math.sinh(a)
        assert chebyshev_u(n, math.cosh(a)) == pytest.approx(ref, rel=10 * n * 2.2e-16)
