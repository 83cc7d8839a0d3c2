"""
Squared 2-Wasserstein distances between Gaussian components.

- full:   ||mu_1 - mu_2||^2 + tr S1 + tr S2 - 2 tr((S1^1/2 S2 S1^1/2)^1/2)
- scaled: ||mu_i - mu_j||^2 + sum_x lambda_x (1/d_i + 1/d_j - 2/sqrt(d_i d_j)),
          exact when S_v = V diag(lambda / d_v) V^T for a shared basis V
- tied:   ||mu_i - mu_j||^2, exact when both covariances are equal

All results are clamped at 0 from below.
"""

import numpy as np
from scipy import linalg

from src.constants import SYMMETRY_TOL
from src.mixture.gmm import GaussianComponent
from src.utils.exception import DomainError, ShapeError


def sqrtm_psd(M: np.ndarray) -> np.ndarray:
    """
    PSD square root V sqrt(Lambda) V^T from the symmetric eigendecomposition.

    Negative eigenvalues (round-off) are clamped to 0.

    Raises:
        DomainError: If M is not square or not symmetric within 1e-9 (relative
            to its largest entry when that exceeds 1).
    """
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ShapeError(f"sqrtm_psd needs a square matrix, got shape {M.shape}")
    scale = max(1.0, float(np.abs(M).max(initial=0.0)))
    if np.abs(M - M.T).max(initial=0.0) > SYMMETRY_TOL * scale:
        raise DomainError("sqrtm_psd needs a symmetric matrix")

    eigvals, eigvecs = linalg.eigh((M + M.T) / 2.0)
    return (eigvecs * np.sqrt(np.clip(eigvals, 0.0, None))) @ eigvecs.T


def _check_dims(a: np.ndarray, b: np.ndarray):
    if a.shape != b.shape:
        raise ShapeError(f"dimension mismatch: {a.shape} vs {b.shape}")


def gaussian_w2_full(a: GaussianComponent, b: GaussianComponent) -> float:
    """Closed-form squared W2 between two Gaussians."""
    _check_dims(a.mu, b.mu)
    _check_dims(a.sigma, b.sigma)

    # Nuclear norm of S_a^1/2 S_b^1/2; no square root of tiny eigenvalues.
    cross_trace = linalg.svdvals(sqrtm_psd(a.sigma) @ sqrtm_psd(b.sigma)).sum()
    value = (
        np.sum((a.mu - b.mu) ** 2)
        + np.trace(a.sigma)
        + np.trace(b.sigma)
        - 2.0 * cross_trace
    )
    return max(float(value), 0.0)


def gaussian_w2_scaled(
    mu_i: np.ndarray,
    mu_j: np.ndarray,
    shared_eigs: np.ndarray,
    d_i: np.ndarray,
    d_j: np.ndarray,
) -> float:
    """Squared W2 between two components sharing a scaled covariance."""
    mu_i, mu_j = np.asarray(mu_i, float), np.asarray(mu_j, float)
    shared_eigs, d_i, d_j = (np.asarray(x, float) for x in (shared_eigs, d_i, d_j))
    _check_dims(mu_i, mu_j)
    _check_dims(shared_eigs, d_i)
    _check_dims(d_i, d_j)
    if np.any(d_i <= 0) or np.any(d_j <= 0):
        raise DomainError("scales must be strictly positive")

    trace_term = np.sum(
        shared_eigs / d_i + shared_eigs / d_j - 2.0 * shared_eigs / np.sqrt(d_i * d_j)
    )
    return max(float(np.sum((mu_i - mu_j) ** 2) + trace_term), 0.0)


def gaussian_w2_tied(mu_i: np.ndarray, mu_j: np.ndarray) -> float:
    """Squared Euclidean distance between means."""
    mu_i, mu_j = np.asarray(mu_i, float), np.asarray(mu_j, float)
    _check_dims(mu_i, mu_j)
    return float(np.sum((mu_i - mu_j) ** 2))
