"""
Distance Computation Component.

This module handles the second stage of the gmot pipeline:
- Loading the graphs listed in the dataset manifest (or given explicitly).
- Computing the pairwise distance matrix with one OT method/variant or a baseline.
- Writing the matrix CSV, its sidecar JSON and, on request, every transport plan.
"""

import sys
from pathlib import Path

from src.constants import EMBEDDING_METHODS
from src.entity.config_entity import DistanceConfig
from src.evaluation.distance_matrix import (
    DistanceMatrix,
    pairwise_distances,
    save_distance_matrix,
    sidecar_path_for,
)
from src.graph.io import STDIN, load_graph_named, load_manifest
from src.transport.solver import export_plan_csv
from src.utils.common import OutputTracker, create_directories, save_run_params
from src.utils.exception import CustomException, DomainError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class DistanceComputation:
    """
    Computes and stores the distance matrix of a graph dataset.
    """

    def __init__(self, config: DistanceConfig):
        """
        Initializes the DistanceComputation component with configuration.

        Args:
            config (DistanceConfig): Method, variant, embedding parameters and paths.
        """
        self.config = config

    def _inputs(self) -> tuple[list[Path], list[str], list[str]]:
        if self.config.graph_paths:
            paths = list(self.config.graph_paths)
            labels = ["unlabeled"] * len(paths)
            names = [p.name for p in paths]
        else:
            entries = load_manifest(self.config.manifest_path)
            paths = [p for p, _ in entries]
            labels = [label for _, label in entries]
            names = [p.name for p in paths]
        if len(paths) < 2:
            raise DomainError(f"need at least 2 graphs, got {len(paths)}")
        if sum(str(p) == STDIN for p in paths) > 1:
            raise DomainError("standard input can supply only one graph")
        return paths, labels, names

    def compute(self) -> DistanceMatrix:
        """
        Loads the graphs, computes all pairwise distances and writes the artifacts.

        Returns:
            DistanceMatrix: The computed matrix.

        Raises:
            CustomException: If any graph is unreadable or computing/writing
                fails; files written so far are removed.
        """
        try:
            cfg = self.config
            paths, labels, names = self._inputs()
            graphs = [load_graph_named(p, cfg.graph_format) for p in paths]
            logger.info(f"Loaded {len(graphs)} graphs")

            dm = pairwise_distances(
                graphs,
                method=cfg.method,
                variant=cfg.variant,
                cfg=cfg.embedding,
                labels=labels,
                names=names,
                n_jobs=cfg.n_jobs,
                keep_plans=cfg.save_plans and cfg.method in EMBEDDING_METHODS,
                cache_dir=cfg.mixture_cache_dir,
            )

            with OutputTracker() as outputs:
                matrix_path = outputs.add(cfg.root_dir / cfg.matrix_file)
                save_distance_matrix(
                    dm, matrix_path, outputs.add(sidecar_path_for(matrix_path))
                )
                if dm.plans:
                    plans_dir = cfg.root_dir / cfg.plans_dir
                    create_directories([plans_dir], verbose=False)
                    for (i, j), plan in dm.plans.items():
                        export_plan_csv(plan, outputs.add(plans_dir / f"plan_{i + 1}_{j + 1}.csv"))
                    logger.info(f"Wrote {len(dm.plans)} transport plans to {plans_dir}")
                save_run_params(outputs.add(cfg.root_dir / "run_params.yaml"), cfg)

            logger.info(f"Distance matrix ({dm.size}x{dm.size}) saved at {matrix_path}")
            return dm

        except Exception as e:
            raise CustomException(e, sys)
