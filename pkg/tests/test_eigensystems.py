import cmath

import numpy as np
import pytest

import hardylab as hl
from hardylab.eigensystems import (
    gram_minimality_experiment,
    koenigs,
    koenigs_eigen_residuals,
    koenigs_powers,
    parabolic_eigen_residual,
    psi_t,
    schroeder_grid_residual,
    spectrum_spiral,
    _koenigs_iterate,
)
from hardylab.errors import (
    MultiplierNotAttractive,
    NegativeParameter,
    NoInteriorFixedPoint,
    NotParabolic,
    NotParabolicNonAutomorphism,
    TargetInGrid,
)
from hardylab.hardy import inner, lft_coeffs

from conftest import random_attractive_map


# ---------------------------------------------------------------------------
# Koenigs data

def test_koenigs_dilation_gives_coordinate():
    kd = koenigs(hl.parse_moebius("0.5,0,0,1"), 16)
    expected = np.zeros(16, complex)
    expected[1] = 1
    np.testing.assert_allclose(kd.kappa, expected, atol=1e-12)
    assert kd.multiplier == pytest.approx(0.5)


def test_koenigs_interior_fixture_closed_form():
    kd = koenigs(hl.parse_moebius("1,0,-1,2"), 12)
    np.testing.assert_allclose(kd.kappa, [0] + [1.0] * 11, atol=1e-10)
    assert kd.alpha == pytest.approx(0.0, abs=1e-12)


def test_koenigs_rotation_model_collinear_with_involution():
    kd = koenigs(hl.rotation_about(0.5, 0.3), 64)
    base = lft_coeffs(hl.involution(0.5), 64)
    cos = abs(np.vdot(base, kd.kappa)) / (np.linalg.norm(base) * np.linalg.norm(kd.kappa))
    assert abs(cos - 1.0) < 1e-8


def test_koenigs_gauge_normalization():
    kd = koenigs(hl.rotation_about(0.4 - 0.1j, 0.5j), 32)
    assert kd.kappa_map(kd.alpha) == pytest.approx(0.0, abs=1e-12)
    assert kd.kappa_map.derivative(kd.alpha) == pytest.approx(1.0, abs=1e-12)


def test_koenigs_methods_agree(rng):
    for _ in range(20):
        f, alpha, lam = random_attractive_map(rng)
        kd = koenigs(f, 64)
        iterated = _koenigs_iterate(f, kd.alpha, kd.multiplier, 64)
        assert np.max(np.abs(kd.kappa[:32] - iterated[:32])) < 1e-8


def test_koenigs_grid_residual(rng):
    for _ in range(10):
        f, *_ = random_attractive_map(rng)
        kd = koenigs(f, 32)
        assert schroeder_grid_residual(kd.kappa_map, f, kd.multiplier) < 1e-8


def test_koenigs_iteration_method_output(rng):
    f, *_ = random_attractive_map(rng)
    kd = koenigs(f, 32, method="iteration")
    assert kd.method == "iteration"
    assert kd.kappa_map is None
    closed = koenigs(f, 32)
    assert np.max(np.abs(kd.kappa[:16] - closed.kappa[:16])) < 1e-8


def test_koenigs_rejects_elliptic():
    with pytest.raises(MultiplierNotAttractive):
        koenigs(hl.involution(0.5), 16)


def test_koenigs_rejects_parabolic():
    with pytest.raises(NoInteriorFixedPoint):
        koenigs(hl.parse_moebius("1,1,-1,3"), 16)


def test_koenigs_powers_monomials():
    kd = koenigs(hl.parse_moebius("0.5,0,0,1"), 12)
    powers = koenigs_powers(kd, 4)
    for n, p in enumerate(powers):
        expected = np.zeros(12, complex)
        expected[n] = 1
        np.testing.assert_allclose(p, expected, atol=1e-12)


def test_koenigs_powers_constant_head():
    kd = koenigs(hl.rotation_about(0.5, 0.3), 16)
    powers = koenigs_powers(kd, 3)
    assert powers[0][0] == 1.0
    assert np.all(powers[0][1:] == 0)


def test_koenigs_power_eigen_residuals():
    kd = koenigs(hl.rotation_about(0.5, 0.3), 64)
    res = koenigs_eigen_residuals(kd, 8)
    assert max(res) < 1e-6
    # the same bound is enforceable inline
    koenigs_powers(kd, 8, check_tol=1e-6)


# ---------------------------------------------------------------------------
# parabolic family

def test_psi_zero_is_constant_one():
    data = psi_t(1j, 0.0, 16)
    np.testing.assert_allclose(data.psi, [1] + [0] * 15, atol=1e-15)
    assert data.eigenvalue == pytest.approx(1.0)


def test_psi_leading_coefficient():
    for t in (0.25, 0.5, 1.5):
        data = psi_t(1j, t, 32)
        assert data.psi[0] == pytest.approx(np.exp(-t), abs=1e-14)


def test_psi_matches_direct_evaluation():
    data = psi_t(1j, 0.5, 64)
    for z in (0.3, 0.5j, -0.4 + 0.2j):
        direct = cmath.exp(0.5 * (z + 1) / (z - 1))
        series = complex(np.polynomial.polynomial.polyval(z, data.psi))
        assert abs(direct - series) < 1e-12


def test_psi_norm_approaches_one():
    # coefficients decay only polynomially; pinned tails from the
    # N = 64 / 128 runs at t = 0.5
    n64 = np.linalg.norm(psi_t(1j, 0.5, 64).psi) ** 2
    n128 = np.linalg.norm(psi_t(1j, 0.5, 128).psi) ** 2
    assert abs(1 - n64) == pytest.approx(3.884e-2, rel=1e-2)
    assert abs(1 - n128) < abs(1 - n64)


def test_psi_prefix_stability():
    a, t = 1j, 0.25
    p64 = psi_t(a, t, 64).psi
    p128 = psi_t(a, t, 128).psi
    np.testing.assert_allclose(p128[:64], p64, atol=1e-15)


def test_psi_multiplicative_in_t():
    a = 1j
    s = t = 0.25
    lhs = np.convolve(psi_t(a, s, 64).psi, psi_t(a, t, 64).psi)[:64]
    rhs = psi_t(a, s + t, 64).psi
    np.testing.assert_allclose(lhs, rhs, atol=1e-13)


def test_psi_rejects_negative_parameters():
    with pytest.raises(NegativeParameter):
        psi_t(1j, -0.1, 16)
    with pytest.raises(NegativeParameter):
        psi_t(-1j, 0.5, 16)


def test_parabolic_eigen_residual_t_zero_exact():
    assert parabolic_eigen_residual(hl.parse_moebius("1,1,-1,3"), 0.0, 32) == 0.0


def test_parabolic_eigen_residual_pinned():
    f = hl.parse_moebius("1,1,-1,3")
    measured = {t: parabolic_eigen_residual(f, t, 64) for t in (0.25, 0.5, 1.0)}
    assert measured[0.25] == pytest.approx(1.967e-2, rel=1e-2)
    assert measured[0.5] == pytest.approx(2.856e-3, rel=1e-2)
    assert measured[1.0] == pytest.approx(1.347e-2, rel=1e-2)
    assert all(v < 3e-2 for v in measured.values())


def test_parabolic_eigen_residual_requires_normalized_fixed_point():
    f = hl.rotate_symbol(hl.parse_moebius("1,1,-1,3"), 0.5)
    with pytest.raises(NotParabolic):
        parabolic_eigen_residual(f, 0.5, 32)


def test_eigenvalues_distinct_on_grid():
    f = hl.parse_moebius("1,1,-1,3")
    grid = [n / 8 for n in range(33)]
    vals = spectrum_spiral(f, grid)
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            assert abs(vals[i] - vals[j]) > 1e-12


def test_spectrum_spiral_real_axis():
    vals = spectrum_spiral(hl.parse_moebius("1,1,-1,3"), [0.0, 1.0, 2.0])
    np.testing.assert_allclose(vals, [1.0, np.exp(-1), np.exp(-2)], atol=1e-9)


def test_spectrum_spiral_log_spiral():
    f = hl.from_halfplane_translation(1 + 1j)
    vals = spectrum_spiral(f, [0.0, 2 * np.pi])
    assert abs(vals[0]) == pytest.approx(1.0)
    assert abs(vals[1]) == pytest.approx(np.exp(-2 * np.pi), rel=1e-9)
    assert cmath.phase(vals[1]) == pytest.approx(0.0, abs=1e-6)


def test_spectrum_spiral_moduli_strictly_decreasing():
    f = hl.parse_moebius("1,1,-1,3")
    grid = np.linspace(0.0, 6.0, 50)
    moduli = [abs(v) for v in spectrum_spiral(f, grid)]
    assert all(b < a for a, b in zip(moduli, moduli[1:]))


def test_spectrum_spiral_rejects_automorphism():
    with pytest.raises(NotParabolicNonAutomorphism):
        spectrum_spiral(hl.from_halfplane_translation(1.0), [0.0, 1.0])


# ---------------------------------------------------------------------------
# gram minimality experiment

def test_gram_rejects_target_in_grid():
    f = hl.parse_moebius("1,1,-1,3")
    with pytest.raises(TargetInGrid):
        gram_minimality_experiment(f, [0.5, 1.0], 0.5, 32)


def test_gram_distances_decay():
    f = hl.parse_moebius("1,1,-1,3")
    rep = gram_minimality_experiment(f, [n / 8 for n in range(1, 33)], 1 / 16, 64)
    d = rep.distances
    assert all(b <= a + 1e-6 for a, b in zip(d, d[1:]))
    assert d[-1] < d[3]
    assert d[-1] < 0.5 * d[0]
    assert rep.gram_sigma_min[0] == pytest.approx(1.0)
    assert rep.gram_sigma_min[-1] < 1e-12


def test_gram_one_point_projection_formula():
    f = hl.parse_moebius("1,1,-1,3")
    rep = gram_minimality_experiment(f, [2.0], 0.0, 64)
    psi0 = psi_t(1j, 0.0, 64).psi
    psi2 = psi_t(1j, 2.0, 64).psi
    overlap = inner(psi0, psi2)
    formula = np.sqrt(1 - abs(overlap) ** 2 / np.linalg.norm(psi2) ** 2)
    assert rep.distances[0] == pytest.approx(float(formula), abs=1e-9)
    # the overlap itself is the coefficient-zero pairing e^{-2}
    assert overlap == pytest.approx(np.exp(-2), abs=1e-12)
