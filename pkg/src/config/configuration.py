"""
Configuration Manager for the gmot pipeline.

- Reads the immutable paths of config/config.yaml and the tunable values of
  config/params.yaml.
- Resolves the run seed (command line, then GMOT_SEED, then params.yaml).
- Turns both into the frozen configuration entities consumed by the
  components. Every getter accepts keyword overrides, which is how the CLI
  flags reach the stages; `None` keeps the configured value.
"""

from pathlib import Path
from typing import Optional, Sequence

from src.constants import CONFIG_FILE_PATH, EMBEDDING_METHODS, PARAMS_FILE_PATH
from src.entity.config_entity import (
    DatasetGenerationConfig,
    DistanceConfig,
    EmbeddingConfig,
    EvaluationConfig,
    PlanExportConfig,
)
from src.utils.common import create_directories, read_yaml
from src.utils.env_config import get_mlflow_uri, get_run_seed


def _pick(override, configured):
    return configured if override is None else override


class ConfigurationManager:
    def __init__(
        self,
        config_filepath=CONFIG_FILE_PATH,
        params_filepath=PARAMS_FILE_PATH,
    ):
        self.config = read_yaml(Path(config_filepath))
        self.params = read_yaml(Path(params_filepath))
        self.params_filepath = Path(params_filepath)

    def resolve_seed(self, seed: Optional[int] = None) -> int:
        if seed is not None:
            return seed
        return get_run_seed(self.params.get("seed"))

    def get_embedding_config(
        self,
        method: Optional[str] = None,
        samples: Optional[int] = None,
        colors: Optional[int] = None,
        depth: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> EmbeddingConfig:
        params = self.params.embedding

        return EmbeddingConfig(
            method=_pick(method, params.method).upper(),
            k=int(_pick(colors, params.colors)),
            d=int(_pick(depth, params.depth)),
            s=int(_pick(samples, params.samples)),
            seed=self.resolve_seed(seed),
            ridge=float(params.ridge),
            chunk_size=int(params.chunk_size),
        )

    def get_dataset_generation_config(
        self,
        out: Optional[Path] = None,
        seed: Optional[int] = None,
    ) -> DatasetGenerationConfig:
        config = self.config.dataset_generation
        params = self.params.generator

        root_dir = Path(_pick(out, config.root_dir))
        create_directories([root_dir])

        dataset_generation_config = DatasetGenerationConfig(
            root_dir=root_dir,
            manifest_file=config.manifest_file,
            models=tuple(m.upper() for m in params.models),
            graphs_per_model=int(params.graphs_per_model),
            n_min=int(params.n_min),
            n_max=int(params.n_max),
            expected_degree=float(params.expected_degree),
            rewire_prob=float(params.rewire_prob),
            seed=self.resolve_seed(seed),
        )

        return dataset_generation_config

    def get_distance_config(
        self,
        method: Optional[str] = None,
        variant: Optional[str] = None,
        samples: Optional[int] = None,
        colors: Optional[int] = None,
        depth: Optional[int] = None,
        seed: Optional[int] = None,
        threads: Optional[int] = None,
        out: Optional[Path] = None,
        manifest: Optional[Path] = None,
        graph_paths: Sequence[Path] = (),
        save_plans: Optional[bool] = None,
        graph_format: Optional[str] = None,
        cache_dir: Optional[Path] = None,
    ) -> DistanceConfig:
        config = self.config.distance_computation
        params = self.params.distance

        root_dir = Path(_pick(out, config.root_dir))
        create_directories([root_dir])
        method = _pick(method, self.params.embedding.method).upper()
        cache_dir = _pick(cache_dir, config.get("mixture_cache_dir"))

        distance_config = DistanceConfig(
            root_dir=root_dir,
            manifest_path=Path(_pick(manifest, config.manifest_path)),
            matrix_file=config.matrix_file,
            method=method,
            variant=_pick(variant, params.variant),
            embedding=self.get_embedding_config(
                method=method if method in EMBEDDING_METHODS else None,
                samples=samples,
                colors=colors,
                depth=depth,
                seed=seed,
            ),
            n_jobs=int(_pick(threads, params.n_jobs)),
            save_plans=bool(_pick(save_plans, params.save_plans)),
            plans_dir=config.plans_dir,
            graph_paths=tuple(Path(p) for p in graph_paths),
            graph_format=_pick(graph_format, "auto"),
            mixture_cache_dir=Path(cache_dir) if cache_dir else None,
        )

        return distance_config

    def get_evaluation_config(
        self,
        matrix: Optional[Path] = None,
        manifest: Optional[Path] = None,
        out: Optional[Path] = None,
        knn_neighbors: Optional[int] = None,
        folds: Optional[int] = None,
        test_frac: Optional[float] = None,
        seed: Optional[int] = None,
    ) -> EvaluationConfig:
        config = self.config.distance_evaluation
        params = self.params.evaluation
        tracking = self.params.get("tracking") or {}

        root_dir = Path(_pick(out, config.root_dir))
        create_directories([root_dir])
        manifest_path = manifest
        if manifest_path is None and Path(config.get("manifest_path") or "").is_file():
            # Without a manifest the labels stored in the matrix sidecar are used.
            manifest_path = config.manifest_path

        evaluation_config = EvaluationConfig(
            root_dir=root_dir,
            matrix_path=Path(_pick(matrix, config.matrix_path)),
            manifest_path=Path(manifest_path) if manifest_path else None,
            report_file=config.report_file,
            leaf_order_file=config.leaf_order_file,
            knn_neighbors=int(_pick(knn_neighbors, params.knn_neighbors)),
            folds=int(_pick(folds, params.folds)),
            test_frac=float(_pick(test_frac, params.test_frac)),
            seed=self.resolve_seed(seed),
            tracking_enabled=bool(tracking.get("enabled", False)),
            mlflow_uri=get_mlflow_uri(self.params_filepath),
            experiment_name=config.experiment_name,
            all_params=dict(params),
        )

        return evaluation_config

    def get_plan_export_config(
        self,
        graph_paths: Sequence[Path],
        method: Optional[str] = None,
        variant: Optional[str] = None,
        samples: Optional[int] = None,
        colors: Optional[int] = None,
        depth: Optional[int] = None,
        seed: Optional[int] = None,
        out: Optional[Path] = None,
        graph_format: Optional[str] = None,
    ) -> PlanExportConfig:
        config = self.config.plan_export

        root_dir = Path(_pick(out, config.root_dir))
        create_directories([root_dir])

        plan_export_config = PlanExportConfig(
            root_dir=root_dir,
            graph_paths=tuple(Path(p) for p in graph_paths),
            method=_pick(method, self.params.embedding.method).upper(),
            variant=_pick(variant, self.params.distance.variant),
            embedding=self.get_embedding_config(
                method=method, samples=samples, colors=colors, depth=depth, seed=seed
            ),
            plan_file=config.plan_file,
            cost_file=config.cost_file,
            alignment_file=config.alignment_file,
            graph_format=_pick(graph_format, "auto"),
        )

        return plan_export_config
