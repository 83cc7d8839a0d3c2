"""
Gaussian mixtures over node embeddings.

Each node's s embedding samples are summarized by a maximum-likelihood Gaussian
(biased 1/s covariance plus an optional ridge), and a graph becomes the uniformly
weighted mixture of its node Gaussians, ordered by node id.

`scale_project` adjusts covariances so that all components share one covariance
up to a per-node scalar, Sigma_v = Sigma_bar / d_v, which is the shape the
eigenvalue-based "scaled" Wasserstein formula needs.
"""

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import joblib
import numpy as np

from src.constants import MIXTURE_FORMAT_VERSION, SCALE_FLOOR
from src.features.embeddings import EmbeddingSamples
from src.utils.exception import ArtifactError, DomainError, ShapeError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class GaussianComponent:
    mu: np.ndarray
    sigma: np.ndarray

    @property
    def dimension(self) -> int:
        return self.mu.shape[0]


@dataclass(frozen=True, eq=False)
class GaussianMixture:
    """n uniformly weighted components stored as stacked arrays."""

    means: np.ndarray
    covariances: np.ndarray

    def __post_init__(self):
        if self.means.ndim != 2 or self.covariances.shape != (
            self.means.shape[0],
            self.means.shape[1],
            self.means.shape[1],
        ):
            raise ShapeError(
                f"means {self.means.shape} and covariances {self.covariances.shape} disagree"
            )

    @property
    def n(self) -> int:
        return self.means.shape[0]

    @property
    def dimension(self) -> int:
        return self.means.shape[1]

    @property
    def weights(self) -> np.ndarray:
        return np.full(self.n, 1.0 / self.n)

    @property
    def components(self) -> list[GaussianComponent]:
        return [GaussianComponent(mu, sigma) for mu, sigma in zip(self.means, self.covariances)]

    @cached_property
    def sqrt_covariances(self) -> np.ndarray:
        """PSD square roots of all covariances, computed once per mixture."""
        eigvals, eigvecs = np.linalg.eigh(self.covariances)
        roots = np.sqrt(np.clip(eigvals, 0.0, None))
        return (eigvecs * roots[:, None, :]) @ eigvecs.transpose(0, 2, 1)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, v: int) -> GaussianComponent:
        return GaussianComponent(self.means[v], self.covariances[v])


@dataclass(frozen=True, eq=False)
class ScaledMixture:
    """Means plus a shared eigenbasis, with per-node positive scales d_v."""

    means: np.ndarray
    shared_eigs: np.ndarray
    shared_basis: np.ndarray
    node_scales: np.ndarray

    @property
    def n(self) -> int:
        return self.means.shape[0]

    @property
    def dimension(self) -> int:
        return self.means.shape[1]


def fit_gaussian(samples: np.ndarray, ridge: float = 0.0) -> GaussianComponent:
    """
    Maximum-likelihood Gaussian of an s x D sample matrix.

    sigma = (1/s) sum_i (x_i - mu)(x_i - mu)^T + ridge * I

    Raises:
        DomainError: If fewer than two samples are given or ridge < 0.
    """
    samples = np.asarray(samples, dtype=np.float64)
    if samples.ndim != 2:
        raise ShapeError(f"samples must be an s x D matrix, got shape {samples.shape}")
    if samples.shape[0] < 2:
        raise DomainError(f"need at least 2 samples to fit a Gaussian, got {samples.shape[0]}")
    if ridge < 0:
        raise DomainError(f"ridge must be >= 0, got {ridge}")

    mu = samples.mean(axis=0)
    centered = samples - mu
    sigma = centered.T @ centered / samples.shape[0]
    sigma = (sigma + sigma.T) / 2.0 + ridge * np.eye(samples.shape[1])
    return GaussianComponent(mu=mu, sigma=sigma)


def fit_mixture(es: EmbeddingSamples, ridge: float = 0.0) -> GaussianMixture:
    """Fits one Gaussian per node (same estimator as `fit_gaussian`, batched)."""
    if es.s < 2:
        raise DomainError(f"need at least 2 samples per node, got {es.s}")
    if ridge < 0:
        raise DomainError(f"ridge must be >= 0, got {ridge}")

    means = es.data.mean(axis=1)
    centered = es.data - means[:, None, :]
    covariances = centered.transpose(0, 2, 1) @ centered / es.s
    covariances = (covariances + covariances.transpose(0, 2, 1)) / 2.0
    covariances += ridge * np.eye(es.dimension)
    return GaussianMixture(means=means, covariances=covariances)


def _project(mixtures: tuple[GaussianMixture, ...]) -> tuple[ScaledMixture, ...]:
    dims = {m.dimension for m in mixtures}
    if len(dims) != 1:
        raise ShapeError(f"mixtures have different dimensions {sorted(dims)}")

    covariances = np.concatenate([m.covariances for m in mixtures])
    shared = covariances.mean(axis=0)
    eigs, basis = np.linalg.eigh((shared + shared.T) / 2.0)
    eigs = np.clip(eigs, 0.0, None)

    shared_trace = np.trace(shared)
    projected = []
    for m in mixtures:
        if shared_trace > 0:
            ratios = np.trace(m.covariances, axis1=1, axis2=2) / shared_trace
            scales = 1.0 / np.maximum(ratios, SCALE_FLOOR)
        else:
            scales = np.ones(m.n)
        projected.append(
            ScaledMixture(
                means=m.means,
                shared_eigs=eigs,
                shared_basis=basis,
                node_scales=np.repeat(scales[:, None], m.dimension, axis=1),
            )
        )
    return tuple(projected)


def scale_project(m: GaussianMixture) -> ScaledMixture:
    """
    Projects a mixture onto shared-covariance form.

    Sigma_bar is the mean node covariance. Node v's trace ratio
    r_v = tr(Sigma_v) / tr(Sigma_bar) gives the scale d_v = 1 / max(r_v, 1e-12) on
    every coordinate, so Sigma_v is replaced by Sigma_bar / d_v. A zero-trace
    Sigma_bar leaves all scales at 1.
    """
    return _project((m,))[0]


def joint_scale_project(
    m1: GaussianMixture, m2: GaussianMixture
) -> tuple[ScaledMixture, ScaledMixture]:
    """Projects two mixtures against one Sigma_bar taken over both sets of components."""
    return _project((m1, m2))


def reconstruct_covariances(sm: ScaledMixture) -> np.ndarray:
    """Sigma_v = V diag(lambda / d_v) V^T for every node, as an (n, D, D) array."""
    V = sm.shared_basis
    return np.einsum("ix,nx,jx->nij", V, sm.shared_eigs / sm.node_scales, V)


def save_mixture(m: GaussianMixture, path: Path) -> Path:
    """Writes a versioned joblib dump of the mixture."""
    payload = {
        "version": MIXTURE_FORMAT_VERSION,
        "means": m.means,
        "covariances": m.covariances,
    }
    try:
        joblib.dump(payload, path)
    except OSError as e:
        raise ArtifactError(f"cannot write mixture: {e.strerror}", path)
    logger.debug(f"Mixture with {m.n} components saved to {path}")
    return Path(path)


def load_mixture(path: Path) -> GaussianMixture:
    """Loads a mixture dump, refusing other format versions."""
    try:
        payload = joblib.load(path)
    except FileNotFoundError:
        raise ArtifactError("mixture file not found", path)
    except Exception as e:
        raise ArtifactError(f"unreadable mixture dump: {e!r}", path) from e
    version = payload.get("version") if isinstance(payload, dict) else None
    if version != MIXTURE_FORMAT_VERSION:
        raise ArtifactError(
            f"unsupported mixture format version {version!r} "
            f"(expected {MIXTURE_FORMAT_VERSION})",
            path,
        )
    return GaussianMixture(means=payload["means"], covariances=payload["covariances"])
