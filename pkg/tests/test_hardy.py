import math

import numpy as np
import pytest

import hardylab as hl
from hardylab.errors import DimensionMismatch, NotSelfMap, PointOutsideDisk
from hardylab.hardy import (
    cauchy_product,
    evaluate,
    inner,
    kernel,
    lft_coeffs,
    lft_series,
    series_exp,
)


def test_inner_monomials_orthonormal():
    for i in range(4):
        for j in range(4):
            ei = np.zeros(4, complex)
            ej = np.zeros(4, complex)
            ei[i] = 1
            ej[j] = 1
            assert inner(ei, ej) == (1.0 if i == j else 0.0)


def test_inner_linearity_and_symmetry(rng):
    f = rng.normal(size=8) + 1j * rng.normal(size=8)
    g = rng.normal(size=8) + 1j * rng.normal(size=8)
    lam = 0.3 - 1.1j
    assert inner(lam * f, g) == pytest.approx(lam * inner(f, g), abs=1e-12)
    assert inner(g, f) == pytest.approx(np.conj(inner(f, g)), abs=1e-12)


def test_reproducing_property(rng):
    n = 32
    f = np.zeros(n, complex)
    f[:10] = rng.normal(size=10) + 1j * rng.normal(size=10)
    for omega in (0.0, 0.5, -0.3 + 0.2j, 0.9j):
        assert inner(f, kernel(omega, 0, n)) == pytest.approx(
            complex(evaluate(f, omega)), abs=1e-12
        )


def test_derivative_kernels(rng):
    n = 24
    f = np.zeros(n, complex)
    f[:8] = rng.normal(size=8) + 1j * rng.normal(size=8)
    omega = 0.4 - 0.25j
    deriv = f.copy()
    for order in range(1, 4):
        deriv = np.arange(len(deriv)) * deriv
        deriv = np.roll(deriv, -1)
        deriv[-1] = 0
        assert inner(f, kernel(omega, order, n)) == pytest.approx(
            complex(evaluate(deriv, omega)), abs=1e-10
        )


def test_kernel_self_pairing_geometric():
    n, omega = 64, 0.5
    k = kernel(omega, 0, n)
    tail = abs(omega) ** (2 * n) / (1 - abs(omega) ** 2)
    assert abs(inner(k, k) - 1 / (1 - abs(omega) ** 2)) <= tail + 1e-12


def test_kernel_examples():
    np.testing.assert_allclose(kernel(0, 0, 4), [1, 0, 0, 0])
    np.testing.assert_allclose(kernel(0.5, 0, 4), [1, 0.5, 0.25, 0.125])
    np.testing.assert_allclose(kernel(0, 1, 4), [0, 1, 0, 0])


def test_kernel_rejects_boundary_point():
    with pytest.raises(PointOutsideDisk):
        kernel(1.0, 0, 8)


def test_eval_constant_and_kernel():
    one = np.zeros(6, complex)
    one[0] = 1
    assert evaluate(one, 0.77) == 1
    k = kernel(0.5, 0, 64)
    assert complex(evaluate(k, 0.5)) == pytest.approx(4 / 3, abs=1e-17 + 0.25**64)


def test_cauchy_product_neutral(rng):
    f = rng.normal(size=10) + 1j * rng.normal(size=10)
    one = np.zeros(10, complex)
    one[0] = 1
    np.testing.assert_allclose(cauchy_product(f, one), f)


def test_cauchy_product_difference_of_squares():
    a = np.array([1, 1, 0], dtype=complex)
    b = np.array([1, -1, 0], dtype=complex)
    np.testing.assert_allclose(cauchy_product(a, b), [1, 0, -1])


def test_cauchy_product_geometric_square():
    # (z/(2-z))^2 = z^2/4 + z^3/4 + 3 z^4/16 + z^5/8 + ...
    f = lft_coeffs(hl.parse_moebius("1,0,-1,2"), 6)
    sq = cauchy_product(f, f)
    np.testing.assert_allclose(sq[:6], [0, 0, 0.25, 0.25, 3 / 16, 1 / 8], atol=1e-15)


def test_cauchy_product_commutative_associative(rng):
    n = 16
    f = np.zeros(n, complex)
    g = np.zeros(n, complex)
    h = np.zeros(n, complex)
    f[:5] = rng.normal(size=5)
    g[:5] = rng.normal(size=5)
    h[:5] = rng.normal(size=5)
    np.testing.assert_allclose(cauchy_product(f, g), cauchy_product(g, f), atol=1e-14)
    np.testing.assert_allclose(
        cauchy_product(cauchy_product(f, g), h),
        cauchy_product(f, cauchy_product(g, h)),
        atol=1e-13,
    )


def test_series_exp_basics():
    zero = np.zeros(8, complex)
    np.testing.assert_allclose(series_exp(zero)[0], 1.0)
    z = np.zeros(8, complex)
    z[1] = 1
    expected = [1 / math.factorial(k) for k in range(8)]
    np.testing.assert_allclose(series_exp(z), expected, atol=1e-15)


def test_series_exp_additivity(rng):
    n = 24
    f = np.zeros(n, complex)
    g = np.zeros(n, complex)
    f[:6] = 0.3 * (rng.normal(size=6) + 1j * rng.normal(size=6))
    g[:6] = 0.3 * (rng.normal(size=6) + 1j * rng.normal(size=6))
    lhs = series_exp(f + g)
    rhs = cauchy_product(series_exp(f), series_exp(g))
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_lft_coeffs_geometric():
    f = lft_coeffs(hl.parse_moebius("1,0,-1,2"), 6)
    np.testing.assert_allclose(f, [0, 0.5, 0.25, 0.125, 0.0625, 0.03125])


def test_lft_coeffs_identity_symbol():
    np.testing.assert_allclose(lft_coeffs(hl.identity(), 4), [0, 1, 0, 0])


def test_lft_coeffs_matches_pointwise_eval(rng):
    n = 64
    for alpha in (0.5, -0.3 + 0.4j):
        f = hl.involution(alpha)
        coeffs = lft_coeffs(f, n)
        for k in range(64):
            z = 0.9 * np.exp(2j * np.pi * k / 64)
            tail = 0.9**n / (1 - 0.9)
            assert abs(complex(evaluate(coeffs, z)) - f(z)) <= 1e-9 + tail


def test_lft_coeffs_involution_leading_terms():
    coeffs = lft_coeffs(hl.involution(0.5), 8)
    assert coeffs[0] == pytest.approx(0.5)
    # next coefficient is -(1 - |alpha|^2) = -0.75
    assert coeffs[1] == pytest.approx(-0.75)


def test_lft_coeffs_rejects_non_self_map():
    with pytest.raises(NotSelfMap):
        lft_coeffs(hl.parse_moebius("2,0,0,1"), 8)


def test_lft_series_allows_boundary_pole():
    # z/(1-z) expands even though it is not a self-map
    coeffs = lft_series(hl.Moebius(1, 0, -1, 1), 5)
    np.testing.assert_allclose(coeffs, [0, 1, 1, 1, 1])


def test_inner_function_norm_saturates():
    for alpha in (0.5, 0.7):
        f = hl.involution(alpha)
        n64 = np.linalg.norm(lft_coeffs(f, 64))
        n128 = np.linalg.norm(lft_coeffs(f, 128))
        assert abs(n64 - n128) < 1e-6
        assert n128 == pytest.approx(1.0, abs=1e-9)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        inner(np.ones(3), np.ones(4))
    with pytest.raises(DimensionMismatch):
        cauchy_product(np.ones(3), np.ones(4))
