"""
Configuration entities for gmot.

Frozen dataclasses give the pipeline typed, immutable parameter sets. The two
domain configs (`GeneratorSpec`, `EmbeddingConfig`) validate themselves on
construction; the stage configs are assembled by `ConfigurationManager` and
together form the run configuration of a CLI command.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from src.constants import (
    BASELINE_METHODS,
    EMBEDDING_METHODS,
    GENERATOR_MODELS,
    GRAPH_FORMATS,
    VARIANTS,
)
from src.utils.exception import DomainError


def _check_graph_format(fmt: str):
    if fmt not in GRAPH_FORMATS:
        raise DomainError(f"unknown graph format {fmt!r}; expected one of {GRAPH_FORMATS}")


@dataclass(frozen=True)
class GeneratorSpec:
    """One random graph: model, size, target mean degree and seed."""

    model: str
    n: int
    expected_degree: float
    seed: int
    rewire_prob: float = 0.1

    def __post_init__(self):
        if self.model not in GENERATOR_MODELS:
            raise DomainError(
                f"unknown generator model {self.model!r}; expected one of {GENERATOR_MODELS}"
            )
        if self.n < 2:
            raise DomainError(f"generator needs n >= 2, got {self.n}")
        if not 0 < self.expected_degree <= self.n - 1:
            raise DomainError(
                f"expected_degree must lie in (0, n-1] = (0, {self.n - 1}], "
                f"got {self.expected_degree}"
            )
        if self.seed < 0:
            raise DomainError(f"seed must be non-negative, got {self.seed}")
        if not 0.0 <= self.rewire_prob <= 1.0:
            raise DomainError(f"rewire_prob must lie in [0, 1], got {self.rewire_prob}")


@dataclass(frozen=True)
class EmbeddingConfig:
    """Sampling parameters of one randomized node embedding."""

    method: str = "CCB"
    k: int = 10
    d: int = 5
    s: int = 1000
    seed: int = 0
    ridge: float = 1e-9
    chunk_size: int = 250

    def __post_init__(self):
        if self.method not in EMBEDDING_METHODS:
            raise DomainError(
                f"unknown embedding {self.method!r}; expected one of {EMBEDDING_METHODS}"
            )
        if self.k < 1:
            raise DomainError(f"color count k must be >= 1, got {self.k}")
        if self.d < 0:
            raise DomainError(f"depth d must be >= 0, got {self.d}")
        if self.s < 2:
            raise DomainError(f"sample count s must be >= 2, got {self.s}")
        if self.seed < 0:
            raise DomainError(f"seed must be non-negative, got {self.seed}")
        if self.ridge < 0:
            raise DomainError(f"ridge must be >= 0, got {self.ridge}")
        if self.chunk_size < 1:
            raise DomainError(f"chunk_size must be >= 1, got {self.chunk_size}")

    @property
    def dimension(self) -> int:
        return self.k * (self.d + 1)


@dataclass(frozen=True)
class DatasetGenerationConfig:
    root_dir: Path
    manifest_file: str
    models: tuple
    graphs_per_model: int
    n_min: int
    n_max: int
    expected_degree: float
    rewire_prob: float
    seed: int


@dataclass(frozen=True)
class DistanceConfig:
    root_dir: Path
    manifest_path: Path
    matrix_file: str
    method: str
    variant: str
    embedding: EmbeddingConfig
    n_jobs: int
    save_plans: bool
    plans_dir: str = "plans"
    # Explicit graph files; when empty the manifest is used.
    graph_paths: tuple = ()
    graph_format: str = "auto"
    # Fitted mixtures are reused from here across runs; None disables the cache.
    mixture_cache_dir: Optional[Path] = None

    def __post_init__(self):
        methods = EMBEDDING_METHODS + BASELINE_METHODS
        if self.method not in methods:
            raise DomainError(f"unknown method {self.method!r}; expected one of {methods}")
        if self.variant not in VARIANTS:
            raise DomainError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        _check_graph_format(self.graph_format)


@dataclass(frozen=True)
class EvaluationConfig:
    root_dir: Path
    matrix_path: Path
    manifest_path: Optional[Path]
    report_file: str
    leaf_order_file: str
    knn_neighbors: int
    folds: int
    test_frac: float
    seed: int
    tracking_enabled: bool = False
    mlflow_uri: str = "file:./mlruns"
    experiment_name: str = "gmot_graph_distances"
    all_params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class PlanExportConfig:
    root_dir: Path
    graph_paths: tuple
    method: str
    variant: str
    embedding: EmbeddingConfig
    plan_file: str = "plan.csv"
    cost_file: str = "cost.csv"
    alignment_file: str = "alignment.json"
    graph_format: str = "auto"

    def __post_init__(self):
        _check_graph_format(self.graph_format)
