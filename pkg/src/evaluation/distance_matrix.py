"""
Pairwise distance matrices over a dataset of graphs.

For the OT methods every graph's mixture is fitted once (in parallel over
graphs) and each unordered pair is then solved once (in parallel over pairs),
timing the cost-matrix build plus the solve. Baselines are timed the same way.
"""

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from src.constants import BASELINE_METHODS, EMBEDDING_METHODS
from src.entity.artifact_schemas import DistanceSidecar, PairTiming
from src.entity.config_entity import EmbeddingConfig
from src.evaluation.baselines import baseline_degree, baseline_ev
from src.graph.core import Graph
from src.transport.solver import (
    TransportPlan,
    build_cost,
    cached_graph_mixture,
    solve_discrete_ot,
)
from src.utils.common import create_directories, load_json, save_json
from src.utils.exception import ArtifactError, DomainError, ShapeError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(eq=False)
class DistanceMatrix:
    values: np.ndarray
    labels: list[str]
    names: list[str]
    method: str
    variant: Optional[str] = None
    config: dict = field(default_factory=dict)
    times: Optional[PairTiming] = None
    plans: dict = field(default_factory=dict)

    def __post_init__(self):
        N = self.values.shape[0]
        if self.values.shape != (N, N):
            raise ShapeError(f"distance matrix must be square, got {self.values.shape}")
        if len(self.labels) != N or len(self.names) != N:
            raise ShapeError(
                f"{N} graphs but {len(self.labels)} labels and {len(self.names)} names"
            )

    @property
    def size(self) -> int:
        return self.values.shape[0]


def _pair_task(i: int, j: int, first, second, method: str, variant: str, keep_plan: bool):
    start = time.perf_counter()
    plan: Optional[TransportPlan] = None
    if method == "DEGREE":
        value = baseline_degree(first, second)
    elif method == "EV":
        value = baseline_ev(first, second)
    else:
        plan = solve_discrete_ot(build_cost(first, second, variant))
        value = plan.cost
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return i, j, value, elapsed_ms, plan if keep_plan else None


def _fit_task(g: Graph, cfg: EmbeddingConfig, cache_dir: Optional[Path]):
    return cached_graph_mixture(g, cfg, cache_dir)


def pairwise_distances(
    graphs: list[Graph],
    method: str,
    variant: str = "tied",
    cfg: Optional[EmbeddingConfig] = None,
    labels: Optional[list[str]] = None,
    names: Optional[list[str]] = None,
    n_jobs: int = 1,
    keep_plans: bool = False,
    cache_dir: Optional[Path] = None,
) -> DistanceMatrix:
    """
    Computes all N(N-1)/2 graph distances once each and mirrors them.

    Args:
        graphs: N >= 2 graphs.
        method: "CCB", "CNP", "DEGREE" or "EV".
        variant: "full", "scaled" or "tied" (OT methods only).
        cfg: Embedding config (OT methods); its `method` is overridden by `method`.
        labels, names: Per-graph class labels and names for the artifacts.
        n_jobs: joblib worker count (-1 = all cores).
        keep_plans: Retain transport plans keyed by (i, j), i < j.
        cache_dir: Directory of fitted mixture dumps to reuse and extend.
    """
    method = method.upper()
    if method not in EMBEDDING_METHODS + BASELINE_METHODS:
        raise DomainError(f"unknown method {method!r}")
    N = len(graphs)
    if N < 2:
        raise DomainError(f"need at least 2 graphs, got {N}")
    labels = list(labels) if labels is not None else ["unlabeled"] * N
    names = list(names) if names is not None else [f"graph_{i}" for i in range(N)]

    representations: list = graphs
    embedding_seconds = 0.0
    config: dict = {}
    if method in EMBEDDING_METHODS:
        cfg = cfg or EmbeddingConfig()
        if cfg.method != method:
            cfg = EmbeddingConfig(**{**cfg.__dict__, "method": method})
        config = dict(cfg.__dict__)
        if cache_dir is not None:
            create_directories([Path(cache_dir)], verbose=False)
        start = time.perf_counter()
        representations = Parallel(n_jobs=n_jobs)(
            delayed(_fit_task)(g, cfg, cache_dir) for g in graphs
        )
        embedding_seconds = time.perf_counter() - start
        logger.info(f"Fitted {N} {method} mixtures in {embedding_seconds:.2f}s")

    pairs = [(i, j) for i in range(N) for j in range(i + 1, N)]
    results = Parallel(n_jobs=n_jobs)(
        delayed(_pair_task)(
            i, j, representations[i], representations[j], method, variant, keep_plans
        )
        for i, j in pairs
    )

    values = np.zeros((N, N))
    pair_ms = []
    plans = {}
    for i, j, value, elapsed_ms, plan in results:
        values[i, j] = values[j, i] = value
        pair_ms.append(elapsed_ms)
        if plan is not None:
            plans[(i, j)] = plan

    times = PairTiming(
        mean_pair_ms=float(np.mean(pair_ms)),
        total_pair_seconds=float(np.sum(pair_ms) / 1000.0),
        embedding_seconds=embedding_seconds,
        pairs=len(pairs),
    )
    logger.info(
        f"{method}{'-' + variant if method in EMBEDDING_METHODS else ''}: "
        f"{len(pairs)} pairs, mean {times.mean_pair_ms:.2f} ms per pair"
    )
    return DistanceMatrix(
        values=values,
        labels=labels,
        names=names,
        method=method,
        variant=variant if method in EMBEDDING_METHODS else None,
        config=config,
        times=times,
        plans=plans,
    )


def save_distance_matrix(dm: DistanceMatrix, csv_path: Path, sidecar_path: Path):
    """Writes the N x N matrix as a headerless CSV and its metadata as JSON."""
    try:
        pd.DataFrame(dm.values).to_csv(
            csv_path, header=False, index=False, float_format="%.17g"
        )
    except OSError as e:
        raise ArtifactError(f"cannot write distance matrix: {e.strerror}", csv_path)

    sidecar = DistanceSidecar(
        method=dm.method,
        variant=dm.variant,
        config=dm.config,
        names=dm.names,
        labels=dm.labels,
        times=dm.times or PairTiming(mean_pair_ms=0.0, total_pair_seconds=0.0, pairs=0),
    )
    save_json(path=Path(sidecar_path), data=sidecar.model_dump())


def sidecar_path_for(csv_path: Path) -> Path:
    return Path(csv_path).with_suffix(".json")


def load_distance_matrix(csv_path: Path, sidecar_path: Optional[Path] = None) -> DistanceMatrix:
    """Reads a matrix CSV and its sidecar (default: same stem with `.json`)."""
    csv_path = Path(csv_path)
    sidecar_path = Path(sidecar_path) if sidecar_path else sidecar_path_for(csv_path)
    try:
        values = pd.read_csv(csv_path, header=None, dtype=np.float64).to_numpy()
    except FileNotFoundError:
        raise ArtifactError("distance matrix not found", csv_path)
    except ValueError as e:
        raise ArtifactError(f"distance matrix is not numeric: {e}", csv_path)

    sidecar = DistanceSidecar.model_validate(load_json(sidecar_path))
    return DistanceMatrix(
        values=values,
        labels=sidecar.labels,
        names=sidecar.names,
        method=sidecar.method,
        variant=sidecar.variant,
        config=sidecar.config,
        times=sidecar.times,
    )
