import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dpcomb.errors import DomainError, NumericalCorruptionError
from dpcomb.transfer import (
    IDENTITY, CombSpec, Contrast, TransferMatrix, amplitudes_from_matrix, comb_matrix,
    comb_matrix_grid, inverse, single_matrix, transmission_from_products,
)

thetas = st.floats(0.05, 20.0)
ks = st.floats(-7.0, 7.0)


def scale(theta, n):
    # bound on every partial product, hence on the rounding it accumulates
    return max(abs(theta), 1 / abs(theta)) ** n


def test_contrast_rejects_zero():
    with pytest.raises(DomainError, match="degenerate contrast"):
        Contrast(0.0)
    with pytest.raises(DomainError):
        single_matrix(0.0, 1.0)


def test_single_matrix_identity_at_theta_one():
    assert single_matrix(1.0, 0.3).distance(IDENTITY) == 0.0


@given(st.floats(-3, 3), st.floats(-10, 10))
def test_single_matrix_cosh_sinh_form(kappa, z):
    m = single_matrix(math.exp(kappa), z)
    assert m.z1 == pytest.approx(math.cosh(kappa), rel=1e-12)
    assert abs(m.z2 - math.sinh(kappa) * cmath.exp(2j * z)) < 1e-12 * math.cosh(kappa)


def test_single_matrix_half_theta():
    m = single_matrix(0.5, math.pi / 2)
    # (1/(2 theta)) [[theta^2+1, ...], [(theta^2-1) e^{i pi}, ...]]
    assert m.z1 == pytest.approx(1.25)
    assert abs(m.z2 - 0.75) < 1e-15
    assert inverse(m).distance(single_matrix(2.0, math.pi / 2)) < 1e-15


def test_as_array_layout():
    m = single_matrix(0.4, 0.2)
    a = m.as_array()
    full = np.array([[0.16 + 1, (0.16 - 1) * cmath.exp(-0.4j)],
                     [(0.16 - 1) * cmath.exp(0.4j), 0.16 + 1]]) / 0.8
    np.testing.assert_allclose(a, full, atol=1e-15)
    assert TransferMatrix.from_array(a) == m


def test_matmul_matches_numpy():
    a, b = single_matrix(0.3, 0.7), single_matrix(1.9, -0.2)
    np.testing.assert_allclose((a @ b).as_array(), a.as_array() @ b.as_array(), atol=1e-13)


def test_comb_n1_is_single_matrix():
    assert comb_matrix(CombSpec(1, 0.4), 1.1) == single_matrix(0.4, 0.0)


@pytest.mark.parametrize("n", [2, 4, 10, 40])
@pytest.mark.parametrize("theta", [0.3, 0.5])
def test_even_n_identity_at_half_pi(n, theta):
    assert comb_matrix(CombSpec(n, theta), math.pi / 2).distance(IDENTITY) < 1e-12


def test_n3_against_displayed_entry():
    theta, k = 0.5, 0.7
    kappa = math.log(theta)
    expected = math.sinh(kappa) ** 2 * math.cosh(kappa) * (cmath.exp(2j * k) + 1) ** 2 + math.cosh(kappa)
    amp = amplitudes_from_matrix(comb_matrix(CombSpec(3, theta), k))
    assert abs(1 / amp.t - expected) < 1e-13


def test_n2_amplitudes_against_displayed_entries():
    theta, k = 0.35, 1.3
    kappa = math.log(theta)
    amp = amplitudes_from_matrix(comb_matrix(CombSpec(2, theta), k))
    assert abs(1 / amp.t - (cmath.exp(2j * k) * math.sinh(kappa) ** 2 + math.cosh(kappa) ** 2)) < 1e-13
    assert abs(amp.r / amp.t + math.sinh(kappa) * math.cosh(kappa) * (cmath.exp(2j * k) + 1)) < 1e-13


def test_identity_amplitudes():
    amp = amplitudes_from_matrix(IDENTITY)
    assert amp.t == 1 and amp.r == 0


def test_amplitudes_unitarity_n4():
    amp = amplitudes_from_matrix(comb_matrix(CombSpec(4, 0.3), 1.0))
    assert abs(amp.transmission + amp.reflection - 1) < 1e-12


def test_amplitudes_reject_corrupt_matrix():
    with pytest.raises(NumericalCorruptionError):
        amplitudes_from_matrix(TransferMatrix(0.5 + 0j, 0j))


def test_scattering_relation_satisfied():
    # [t, 0]^T = M [1, r]^T
    m = comb_matrix(CombSpec(5, 0.6), 0.9)
    amp = amplitudes_from_matrix(m)
    out = m.as_array() @ np.array([1.0, amp.r])
    assert abs(out[0] - amp.t) < 1e-13 and abs(out[1]) < 1e-13


def test_inverse_product():
    m = comb_matrix(CombSpec(6, 0.45), 2.2)
    assert (m @ inverse(m)).distance(IDENTITY) < 1e-12
    assert inverse(IDENTITY) == IDENTITY


def test_spacing_rescales_k():
    assert comb_matrix(CombSpec(4, 0.3, h=2.5), 0.4) == comb_matrix(CombSpec(4, 0.3), 1.0)


def test_overflow_guard():
    with pytest.raises(NumericalCorruptionError):
        comb_matrix(CombSpec(400, 1e-3), 0.1)


@settings(max_examples=200)
@given(st.floats(0.2, 5.0), ks, st.integers(1, 200))
def test_su11_closure(theta, k, n):
    m = comb_matrix(CombSpec(n, theta), k)
    assert m.su11_defect() <= 1e-10 * max(1.0, abs(m.z1) ** 2)


def test_su11_closure_near_resonance_absolute():
    m = comb_matrix(CombSpec(200, 0.05), math.pi / 2)
    assert m.su11_defect() <= 1e-10


def test_guard_fires_inside_nominal_range():
    # theta = 0.05 grows like cosh(log theta)^n ~ 10^200 at n = 200
    with pytest.raises(NumericalCorruptionError):
        comb_matrix(CombSpec(200, 0.05), 0.0)
    comb_matrix(CombSpec(110, 0.05), 0.0)


@given(thetas, ks, st.integers(1, 30))
def test_conjugation_symmetry(theta, k, n):
    a = comb_matrix(CombSpec(n, theta), math.pi - k)
    b = comb_matrix(CombSpec(n, theta), k).conjugate()
    assert a.distance(b) <= 1e-12 * scale(theta, n)


@given(thetas, ks, st.integers(1, 30))
def test_sign_flip(theta, k, n):
    a = comb_matrix(CombSpec(n, -theta), k)
    b = comb_matrix(CombSpec(n, theta), k)
    assert a.distance(b if n % 2 == 0 else -b) <= 1e-12 * scale(theta, n)


@given(st.floats(0.05, 20.0), ks)
def test_inversion_single_factor(theta, k):
    a = comb_matrix(CombSpec(1, 1 / theta), k)
    assert a.distance(inverse(comb_matrix(CombSpec(1, theta), k))) <= 1e-12 * abs(a.z1)


@given(st.floats(0.05, 0.95), ks, st.integers(2, 30))
def test_inversion_reverses_factor_order(theta, k, n):
    # the inverse runs the sites backwards: conjugate, then translate by (n-1)k
    m = comb_matrix(CombSpec(n, 1 / theta), k).conjugate()
    shifted = TransferMatrix(m.z1, m.z2 * cmath.exp(2j * (n - 1) * k))
    b = inverse(comb_matrix(CombSpec(n, theta), k))
    assert shifted.distance(b) <= 1e-10 * max(1.0, abs(b.z1))
    assert abs(abs(m.z1) - abs(b.z1)) <= 1e-10 * abs(b.z1)


def test_grid_matches_scalar(backend):
    k = np.linspace(-1, 4, 37)
    z1, z2 = comb_matrix_grid(0.37, 9, k, h=1.3)
    for i, ki in enumerate(k):
        m = comb_matrix(CombSpec(9, 0.37, 1.3), ki)
        assert abs(z1[i] - m.z1) < 1e-14 * abs(m.z1) and abs(z2[i] - m.z2) < 1e-14 * abs(m.z1)
    t = transmission_from_products(0.37, 9, k, h=1.3)
    assert np.all((t > 0) & (t <= 1 + 1e-15))
