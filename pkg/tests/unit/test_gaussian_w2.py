"""
Unit Tests for the PSD square root and the closed-form Gaussian W2 variants.
"""

import numpy as np
import pytest

from src.mixture.gmm import GaussianComponent
from src.transport.gaussian_w2 import (
    gaussian_w2_full,
    gaussian_w2_scaled,
    gaussian_w2_tied,
    sqrtm_psd,
)
from src.utils.exception import DomainError, ShapeError


def _random_spd(rng, D):
    B = rng.normal(size=(D, D))
    return B @ B.T + 0.1 * np.eye(D)


def test_sqrtm_psd_squares_back():
    M = _random_spd(np.random.default_rng(0), 5)
    R = sqrtm_psd(M)
    np.testing.assert_allclose(R @ R, M, atol=1e-10)
    np.testing.assert_allclose(R, R.T, atol=1e-12)


def test_sqrtm_psd_clamps_round_off():
    M = np.array([[1.0, 1.0], [1.0, 1.0]]) - 1e-14 * np.eye(2)
    R = sqrtm_psd(M)
    assert np.all(np.isfinite(R))


def test_sqrtm_psd_rejects_asymmetric():
    with pytest.raises(DomainError):
        sqrtm_psd(np.array([[1.0, 0.5], [0.0, 1.0]]))


def test_sqrtm_psd_rejects_non_square():
    with pytest.raises(ShapeError):
        sqrtm_psd(np.ones((2, 3)))


def test_full_identical_components_is_zero():
    sigma = _random_spd(np.random.default_rng(1), 4)
    a = GaussianComponent(mu=np.arange(4.0), sigma=sigma)
    assert gaussian_w2_full(a, a) == pytest.approx(0.0, abs=1e-9)


def test_full_one_dimensional():
    # W2^2 between N(0, 1) and N(3, 4) is 3^2 + (1 - 2)^2
    a = GaussianComponent(mu=np.array([0.0]), sigma=np.array([[1.0]]))
    b = GaussianComponent(mu=np.array([3.0]), sigma=np.array([[4.0]]))
    assert gaussian_w2_full(a, b) == pytest.approx(10.0)


def test_full_is_symmetric():
    rng = np.random.default_rng(2)
    a = GaussianComponent(rng.normal(size=3), _random_spd(rng, 3))
    b = GaussianComponent(rng.normal(size=3), _random_spd(rng, 3))
    assert gaussian_w2_full(a, b) == pytest.approx(gaussian_w2_full(b, a), rel=1e-9)


def test_full_dimension_mismatch():
    a = GaussianComponent(np.zeros(2), np.eye(2))
    b = GaussianComponent(np.zeros(3), np.eye(3))
    with pytest.raises(ShapeError):
        gaussian_w2_full(a, b)


def test_full_equal_covariances_reduces_to_tied():
    rng = np.random.default_rng(3)
    sigma = _random_spd(rng, 4)
    mu1, mu2 = rng.normal(size=4), rng.normal(size=4)
    full = gaussian_w2_full(GaussianComponent(mu1, sigma), GaussianComponent(mu2, sigma))
    assert full == pytest.approx(gaussian_w2_tied(mu1, mu2), abs=1e-7)


def test_tied_is_squared_euclidean():
    assert gaussian_w2_tied([0.0, 0.0], [3.0, 4.0]) == 25.0


def test_scaled_matches_full_for_scaled_covariances():
    rng = np.random.default_rng(4)
    base = _random_spd(rng, 5)
    eigs, V = np.linalg.eigh(base)
    mu_i, mu_j = rng.normal(size=5), rng.normal(size=5)
    d_i, d_j = np.full(5, 0.5), np.full(5, 2.0)
    full = gaussian_w2_full(
        GaussianComponent(mu_i, base / 0.5), GaussianComponent(mu_j, base / 2.0)
    )
    scaled = gaussian_w2_scaled(mu_i, mu_j, eigs, d_i, d_j)
    assert scaled == pytest.approx(full, abs=1e-7)


def test_scaled_equal_scales_is_tied():
    mu_i, mu_j = np.array([1.0, 0.0]), np.array([0.0, 1.0])
    assert gaussian_w2_scaled(mu_i, mu_j, [2.0, 3.0], [1.5, 1.5], [1.5, 1.5]) == pytest.approx(2.0)


def test_scaled_rejects_non_positive_scales():
    with pytest.raises(DomainError):
        gaussian_w2_scaled([0.0], [1.0], [1.0], [0.0], [1.0])


def test_full_w2_stable_for_nearly_singular_covariances():
    # Rank-4 sample covariances in 12 dimensions plus a 1e-9 ridge, as fitted
    # mixtures produce them.
    rng = np.random.default_rng(11)

    def component():
        X = rng.normal(size=(4, 12))
        return GaussianComponent(rng.normal(size=12), X.T @ X / 4 + 1e-9 * np.eye(12))

    a, b = component(), component()
    assert gaussian_w2_full(a, b) == pytest.approx(gaussian_w2_full(b, a), abs=1e-10)

    nudged = GaussianComponent(a.mu, a.sigma * (1 + 1e-15))
    assert gaussian_w2_full(a, nudged) <= 1e-9
