"""
Optimal transport between Gaussian mixtures.

The mixture distance is the discrete transport problem between the two sets of
uniformly weighted components, with the squared Gaussian W2 as ground cost:

    MW2^2(M1, M2) = min_pi sum_ij C_ij pi_ij,  pi 1 = 1/n1,  pi^T 1 = 1/n2

It is solved exactly with the network simplex of POT (`ot.emd`), which returns a
vertex of the transportation polytope, i.e. a sparse plan usable as a node
alignment.
"""

from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

import joblib
import numpy as np
import ot
import pandas as pd
from scipy.spatial.distance import cdist

from src.constants import COST_CLAMP_TOL, MIXTURE_FORMAT_VERSION, VARIANTS
from src.entity.config_entity import EmbeddingConfig
from src.features.embeddings import sample_embeddings
from src.graph.core import Graph
from src.mixture.gmm import (
    GaussianMixture,
    ScaledMixture,
    fit_mixture,
    joint_scale_project,
    load_mixture,
    save_mixture,
)
from src.utils.exception import ArtifactError, DomainError, ShapeError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class CostMatrix:
    values: np.ndarray
    variant: str

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape


@dataclass(frozen=True, eq=False)
class TransportPlan:
    pi: np.ndarray
    cost: float

    @property
    def support_size(self) -> int:
        return int(np.count_nonzero(self.pi > 0))


def _full_cost(m1: GaussianMixture, m2: GaussianMixture) -> np.ndarray:
    traces1 = np.trace(m1.covariances, axis1=1, axis2=2)
    traces2 = np.trace(m2.covariances, axis1=1, axis2=2)
    cost = cdist(m1.means, m2.means, "sqeuclidean")

    # tr((S1^1/2 S2 S1^1/2)^1/2) is the nuclear norm of S1^1/2 S2^1/2, which has
    # the same singular values with the arguments swapped.
    roots2 = m2.sqrt_covariances
    for i, root in enumerate(m1.sqrt_covariances):
        cross_traces = np.linalg.svd(root @ roots2, compute_uv=False).sum(axis=1)
        cost[i] += traces1[i] + traces2 - 2.0 * cross_traces

        # Identical components have zero cost exactly.
        same = np.all(m1.means[i] == m2.means, axis=1) & np.all(
            m1.covariances[i] == m2.covariances, axis=(1, 2)
        )
        cost[i, same] = 0.0
    return cost


def _scaled_cost(s1: ScaledMixture, s2: ScaledMixture) -> np.ndarray:
    if not np.array_equal(s1.shared_eigs, s2.shared_eigs):
        raise DomainError("scaled mixtures must come from one joint projection")
    if np.any(s1.node_scales <= 0) or np.any(s2.node_scales <= 0):
        raise DomainError("scales must be strictly positive")

    # sum_x lambda_x (1/sqrt(d_ix) - 1/sqrt(d_jx))^2, kept as a sum of squares.
    lam = np.clip(s1.shared_eigs, 0.0, None)
    roots1 = np.sqrt(lam / s1.node_scales)
    roots2 = np.sqrt(lam / s2.node_scales)
    return cdist(s1.means, s2.means, "sqeuclidean") + cdist(roots1, roots2, "sqeuclidean")


def build_cost(m1, m2, variant: str) -> CostMatrix:
    """
    Pairwise component distances for one variant.

    `full` and `tied` take two GaussianMixtures. `scaled` takes two ScaledMixtures
    from one joint projection; two GaussianMixtures are projected jointly first.

    Raises:
        ShapeError: Mixtures live in different dimensions.
        DomainError: Unknown variant or mismatched representations.
    """
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if m1.dimension != m2.dimension:
        raise ShapeError(f"mixture dimensions differ: {m1.dimension} vs {m2.dimension}")

    if variant == "scaled":
        if isinstance(m1, GaussianMixture) and isinstance(m2, GaussianMixture):
            m1, m2 = joint_scale_project(m1, m2)
        if not (isinstance(m1, ScaledMixture) and isinstance(m2, ScaledMixture)):
            raise DomainError("scaled cost needs two ScaledMixtures or two GaussianMixtures")
        values = _scaled_cost(m1, m2)
    else:
        if not (isinstance(m1, GaussianMixture) and isinstance(m2, GaussianMixture)):
            raise DomainError(f"{variant} cost needs two GaussianMixtures")
        if variant == "tied":
            values = cdist(m1.means, m2.means, "sqeuclidean")
        else:
            values = _full_cost(m1, m2)

    if not np.all(np.isfinite(values)):
        raise DomainError("cost matrix has non-finite entries")
    if values.min() < -COST_CLAMP_TOL:
        raise DomainError(f"cost matrix has negative entries down to {values.min():.3g}")
    # Round-off within the tolerance is clamped to 0.
    return CostMatrix(values=np.maximum(values, 0.0), variant=variant)


def solve_discrete_ot(C: CostMatrix) -> TransportPlan:
    """
    Exact uniform-marginal transport via network simplex.

    Raises:
        DomainError: Negative or non-finite costs.
    """
    M = np.ascontiguousarray(C.values, dtype=np.float64)
    if M.ndim != 2 or 0 in M.shape:
        raise ShapeError(f"cost matrix must be a non-empty 2-D array, got {M.shape}")
    if not np.all(np.isfinite(M)) or M.min() < 0:
        raise DomainError("cost matrix must be finite and non-negative")

    n1, n2 = M.shape
    a = np.full(n1, 1.0 / n1)
    b = np.full(n2, 1.0 / n2)
    pi, log = ot.emd(a, b, M, numItermax=max(100_000, 50 * n1 * n2), log=True)
    if log.get("warning"):
        logger.warning(f"network simplex: {log['warning']}")
    return TransportPlan(pi=pi, cost=float(np.sum(pi * M)))


def node_alignment(plan: TransportPlan) -> np.ndarray:
    """For each node of the first graph, the node of the second receiving most of its mass."""
    return np.argmax(plan.pi, axis=1)


def graph_mixture(g: Graph, cfg: EmbeddingConfig) -> GaussianMixture:
    """Samples embeddings for `g` and fits its Gaussian mixture."""
    return fit_mixture(sample_embeddings(g, cfg), ridge=cfg.ridge)


def mixture_cache_key(g: Graph, cfg: EmbeddingConfig) -> str:
    """Content hash of everything a fitted mixture depends on (chunking excluded)."""
    A = g.adjacency
    settings = {**asdict(cfg), "chunk_size": None}
    return joblib.hash((MIXTURE_FORMAT_VERSION, g.n, A.indptr, A.indices, A.data, settings))


def cached_graph_mixture(
    g: Graph, cfg: EmbeddingConfig, cache_dir: Optional[Path] = None
) -> GaussianMixture:
    """
    `graph_mixture` backed by a directory of mixture dumps.

    A hit loads the dump; a miss (or an unreadable entry) fits and writes it.
    Without a cache directory this is plain `graph_mixture`.
    """
    if cache_dir is None:
        return graph_mixture(g, cfg)

    path = Path(cache_dir) / f"{mixture_cache_key(g, cfg)}.joblib"
    if path.is_file():
        try:
            return load_mixture(path)
        except ArtifactError as e:
            logger.warning(f"Refitting mixture, cache entry unusable: {e}")
    m = graph_mixture(g, cfg)
    save_mixture(m, path)
    return m


def mixture_distance(
    g1: Graph, g2: Graph, cfg: EmbeddingConfig, variant: str = "tied"
) -> tuple[float, TransportPlan]:
    """
    Mixture Wasserstein distance (squared) between two graphs and its plan.

    Both graphs are embedded with the same config; when they have the same node
    count they see the same colorings, otherwise their colorings come from
    independent seed streams.
    """
    m1, m2 = graph_mixture(g1, cfg), graph_mixture(g2, cfg)
    plan = solve_discrete_ot(build_cost(m1, m2, variant))
    return plan.cost, plan


def export_plan_csv(plan: TransportPlan, path: Path) -> Path:
    """Writes the non-zero plan entries as 1-based `i,j,mass` rows, row-major."""
    rows, cols = np.nonzero(plan.pi > 0)
    frame = pd.DataFrame({"i": rows + 1, "j": cols + 1, "mass": plan.pi[rows, cols]})
    return _write_csv(frame, path)


def export_cost_csv(C: CostMatrix, path: Path) -> Path:
    """Writes every cost entry as 1-based `i,j,cost` rows, row-major."""
    n1, n2 = C.shape
    rows, cols = np.divmod(np.arange(n1 * n2), n2)
    frame = pd.DataFrame({"i": rows + 1, "j": cols + 1, "cost": C.values.ravel()})
    return _write_csv(frame, path)


def _write_csv(frame: pd.DataFrame, path: Path) -> Path:
    try:
        frame.to_csv(path, index=False, float_format="%.17g")
    except OSError as e:
        raise ArtifactError(f"cannot write csv: {e.strerror}", path)
    return Path(path)
