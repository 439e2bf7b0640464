import numpy as np
import pytest

import hardylab as hl
from hardylab.conjugations import (
    Conjugation,
    bilinear,
    build_conjugation,
    c_orthogonality_matrix,
    canonical,
    csym_residual,
    involutive_polar_factor,
    jalpha,
    max_offdiagonal,
    rotation_conjugation,
)
from hardylab.errors import AlphaOutOfRange, DimensionMismatch
from hardylab.hardy import inner, lft_coeffs
from hardylab.operators import comp_matrix
from hardylab.serialize import conjugation_from_json, conjugation_to_json


def test_canonical_action():
    c = canonical(2)
    np.testing.assert_allclose(c(np.array([1j, 1.0])), [-1j, 1.0])


def test_axioms_quantified(rng):
    for c in (canonical(16), rotation_conjugation(0.8, 16), jalpha(0.5, 16)):
        for _ in range(50):
            f = rng.normal(size=16) + 1j * rng.normal(size=16)
            g = rng.normal(size=16) + 1j * rng.normal(size=16)
            lam = rng.normal() + 1j * rng.normal()
            assert abs(inner(c(f), c(g)) - inner(g, f)) < 1e-9 * (1 + np.linalg.norm(f) * np.linalg.norm(g))
            assert np.linalg.norm(c(c(f)) - f) < 1e-9 * (1 + np.linalg.norm(f))
            assert np.linalg.norm(c(lam * f) - np.conj(lam) * c(f)) < 1e-12 * (1 + abs(lam) * np.linalg.norm(f))


def test_rotation_conjugation_is_diagonal():
    c = rotation_conjugation(0.3, 8)
    np.testing.assert_allclose(c.u, np.diag(np.exp(2j * 0.3 * np.arange(8))), atol=1e-15)


def test_jalpha_axioms_machine_precision():
    for n in (16, 32, 64):
        c = jalpha(0.5, n)
        assert c.unitarity_residual < 1e-12
        assert c.involution_residual < 1e-12


def test_jalpha_real_alpha_has_real_factor():
    c = jalpha(0.5, 16)
    assert np.abs(c.u.imag).max() < 1e-14
    w = involutive_polar_factor(comp_matrix(hl.involution(0.5), 16).mat.real)
    np.testing.assert_allclose(c.u, w, atol=1e-14)


def test_jalpha_rejects_bad_alpha():
    with pytest.raises(AlphaOutOfRange):
        jalpha(0.0, 8)
    with pytest.raises(AlphaOutOfRange):
        jalpha(1.2, 8)


def test_build_conjugation_dispatch():
    assert build_conjugation("canonical", 8).kind == "canonical"
    assert build_conjugation("rotation", 8, theta=0.2).kind == "rotation"
    assert build_conjugation("jalpha", 8, alpha=0.4).kind == "jalpha"
    with pytest.raises(ValueError):
        build_conjugation("nope", 8)


def test_bilinear_examples():
    c = canonical(4)
    one = np.array([1, 0, 0, 0], dtype=complex)
    assert bilinear(one, one, c) == pytest.approx(1.0)
    z1 = np.array([0, 1, 0, 0], dtype=complex)
    assert bilinear(one, z1, c) == pytest.approx(0.0)
    iso = np.array([1, 1j, 0, 0], dtype=complex)
    assert bilinear(iso, iso, c) == pytest.approx(0.0)


def test_bilinear_symmetric(rng):
    c = jalpha(0.3 + 0.4j, 16)
    f = rng.normal(size=16) + 1j * rng.normal(size=16)
    g = rng.normal(size=16) + 1j * rng.normal(size=16)
    assert bilinear(f, g, c) == pytest.approx(bilinear(g, f, c), abs=1e-9)


def test_csym_residual_diagonal_canonical():
    t = np.diag([(0.3 + 0.1j) ** n for n in range(8)])
    assert csym_residual(t, canonical(8)) == 0.0


def test_csym_residual_jalpha_monotone_and_pinned():
    vals = {}
    for n in (16, 32, 64):
        t = comp_matrix(hl.involution(0.5), n)
        vals[n] = csym_residual(t, jalpha(0.5, n))
    assert vals[64] < vals[32] < vals[16]
    assert vals[16] == pytest.approx(5.079e-2, rel=1e-2)
    assert vals[64] == pytest.approx(2.824e-2, rel=1e-2)
    assert vals[64] < 3.2e-2


def test_csym_residual_canonical_floor_parabolic():
    t = comp_matrix(hl.parse_moebius("1,1,-1,3"), 32)
    assert csym_residual(t, canonical(32)) > 0.01


def test_csym_scalar_gauge():
    t = comp_matrix(hl.involution(0.5), 16)
    c = jalpha(0.5, 16)
    for lam in (1j, np.exp(0.7j)):
        scaled = c.rescaled(lam)
        assert csym_residual(t, scaled) == pytest.approx(csym_residual(t, c), abs=1e-12)


def test_rescaled_requires_unimodular():
    with pytest.raises(ValueError):
        canonical(4).rescaled(2.0)


def test_c_orthogonality_monomials():
    c = canonical(6)
    fam = list(np.eye(6, dtype=complex))
    np.testing.assert_allclose(c_orthogonality_matrix(fam, c), np.eye(6), atol=1e-15)


def test_c_orthogonality_diagonal_eigenvectors(rng):
    d = np.diag(np.array([1.0, 2.0, 3.0, 4.5]))
    _, vecs = np.linalg.eig(d)
    b = c_orthogonality_matrix(list(vecs.T), canonical(4))
    assert max_offdiagonal(b) < 1e-14


def test_c_orthogonality_involution_powers_pinned():
    n = 64
    c = jalpha(0.5, n)
    base = lft_coeffs(hl.involution(0.5), n)
    fam = [np.zeros(n, complex)]
    fam[0][0] = 1.0
    for _ in range(7):
        fam.append(np.convolve(fam[-1], base)[:n])
    b = c_orthogonality_matrix(fam, c)
    off = max_offdiagonal(b)
    assert off > 0.001
    assert off == pytest.approx(0.5389, abs=5e-3)
    assert np.linalg.norm(b - b.T) < 1e-10 * np.linalg.norm(b)


def test_eigenvector_pairing_bound(rng):
    # approximately symmetric matrix: pairings of distinct-eigenvalue
    # eigenvectors bounded by the symmetry defect over the gap
    n = 8
    d = np.diag(np.linspace(1.0, 8.0, n)).astype(complex)
    pert = 1e-6 * (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    t = d + pert
    c = canonical(n)
    eps = csym_residual(t, c)
    lam, vecs = np.linalg.eig(t)
    tnorm = np.linalg.norm(t)
    for i in range(n):
        for j in range(n):
            gap = abs(lam[i] - lam[j])
            if i == j or gap < 0.5:
                continue
            pairing = abs(bilinear(vecs[:, i], vecs[:, j], c))
            bound = 2 * eps * tnorm / gap * np.linalg.norm(vecs[:, i]) * np.linalg.norm(vecs[:, j])
            assert pairing <= bound + 1e-12


def test_conjugation_json_round_trip():
    c = jalpha(0.3 - 0.2j, 12)
    data = conjugation_to_json(c)
    back = conjugation_from_json(data)
    assert isinstance(back, Conjugation)
    np.testing.assert_array_equal(back.u, c.u)
    assert back.kind == c.kind
    assert back.params == c.params


def test_dimension_checks():
    c = canonical(8)
    with pytest.raises(DimensionMismatch):
        c(np.ones(7))
    with pytest.raises(DimensionMismatch):
        csym_residual(np.eye(7), c)
    with pytest.raises(DimensionMismatch):
        c_orthogonality_matrix([np.ones(7)], c)
