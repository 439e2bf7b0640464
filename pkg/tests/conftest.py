import numpy as np
import pytest

import hardylab as hl


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def fixture_maps():
    """The six reference symbols used throughout the suite."""
    return {
        "dilation": hl.parse_moebius("0.5,0,0,1"),           # z/2
        "interior": hl.parse_moebius("1,0,-1,2"),            # z/(2-z)
        "involution": hl.involution(0.5),                     # (0.5-z)/(1-0.5z)
        "elliptic3": hl.rotation_about(0.5, np.exp(2j * np.pi / 3)),
        "hyperbolic": hl.parse_moebius("1,0.5,0.5,1"),       # (z+1/2)/(1+z/2)
        "parabolic": hl.parse_moebius("1,1,-1,3"),           # (1+z)/(3-z)
    }


def random_unitary(rng, n):
    """Product of Householder reflectors with a random diagonal phase."""
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_attractive_map(rng):
    """Self-map with interior fixed point alpha and multiplier lambda,
    0.1 <= |lambda| <= 0.9, built as sigma o (lam z / (1 - mu z)) o sigma."""
    alpha = rng.uniform(0.05, 0.6) * np.exp(2j * np.pi * rng.uniform())
    r = rng.uniform(0.1, 0.9)
    lam = r * np.exp(2j * np.pi * rng.uniform())
    mu = rng.uniform(0.0, 0.9 * (1.0 - r)) * np.exp(2j * np.pi * rng.uniform())
    g = hl.Moebius(lam, 0, -mu, 1)
    sigma = hl.involution(alpha)
    return hl.compose(sigma, hl.compose(g, sigma)), complex(alpha), complex(lam)
