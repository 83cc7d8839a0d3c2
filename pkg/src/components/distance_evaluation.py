"""
Distance Evaluation Component.

This module handles the third stage of the gmot pipeline:
- Loading a distance matrix and aligning it with the labels manifest.
- Scoring it: weighted kNN cross-validation, silhouette and class separation.
- Writing the evaluation report and the dendrogram leaf order.
- Logging parameters and metrics to MLflow when tracking is enabled.
"""

import sys
from pathlib import Path

import numpy as np
import pandas as pd

from src.entity.artifact_schemas import EvalReport
from src.entity.config_entity import EvaluationConfig
from src.evaluation.distance_matrix import DistanceMatrix, load_distance_matrix
from src.evaluation.metrics import evaluate, hierarchical_order
from src.graph.io import load_manifest
from src.utils.common import OutputTracker, save_json, save_run_params
from src.utils.exception import ArtifactError, CustomException
from src.utils.logger import get_logger

logger = get_logger(__name__)


class DistanceEvaluation:
    """
    Evaluates a distance matrix against class labels and logs the results.
    """

    def __init__(self, config: EvaluationConfig):
        """
        Initializes the DistanceEvaluation component with configuration.

        Args:
            config (EvaluationConfig): Paths, kNN/CV parameters and tracking settings.
        """
        self.config = config

    def _with_manifest_labels(self, dm: DistanceMatrix) -> DistanceMatrix:
        """Replaces sidecar labels by the manifest's, matched on graph file name."""
        entries = load_manifest(self.config.manifest_path)
        if len(entries) != dm.size:
            raise ArtifactError(
                f"matrix has {dm.size} graphs but the manifest lists {len(entries)}",
                self.config.manifest_path,
            )
        labels = {path.name: label for path, label in entries}
        missing = [name for name in dm.names if name not in labels]
        if missing:
            raise ArtifactError(
                f"no label for: {', '.join(missing)}", self.config.manifest_path
            )
        dm.labels = [labels[name] for name in dm.names]
        return dm

    def log_into_mlflow(self, report: EvalReport):
        """Logs parameters and metrics; tracking failures never fail the stage."""
        try:
            import mlflow

            mlflow.set_tracking_uri(self.config.mlflow_uri)
            mlflow.set_experiment(self.config.experiment_name)

            metrics = {"knn_mean": report.knn_mean, "knn_std": report.knn_std}
            if report.silhouette is not None:
                metrics["silhouette"] = report.silhouette
            if report.time_ms is not None:
                metrics["time_ms"] = report.time_ms

            run_name = f"{report.method}_{report.variant or 'baseline'}_{pd.Timestamp.now().strftime('%Y_%m_%d_%H_%M')}"
            with mlflow.start_run(run_name=run_name):
                mlflow.log_params(
                    {
                        **self.config.all_params,
                        "method": report.method,
                        "variant": report.variant,
                        "seed": report.seed,
                    }
                )
                mlflow.log_metrics(metrics)
            logger.info(f"Logged evaluation to MLflow at {self.config.mlflow_uri}")
        except Exception as e:
            logger.warning(f"MLflow logging failed but pipeline continues: {e}")

    def run(self) -> EvalReport:
        """
        Main execution logic for the evaluation stage.

        Returns:
            EvalReport: The written report.

        Raises:
            CustomException: On a size mismatch, a missing label or any IO
                failure; files written so far are removed.
        """
        try:
            cfg = self.config
            dm = load_distance_matrix(cfg.matrix_path)
            if cfg.manifest_path is not None:
                dm = self._with_manifest_labels(dm)
            logger.info(f"Evaluating {dm.method} matrix over {dm.size} graphs")

            report = evaluate(
                dm,
                k=cfg.knn_neighbors,
                folds=cfg.folds,
                test_frac=cfg.test_frac,
                seed=cfg.seed,
            )
            order = hierarchical_order(dm)

            with OutputTracker() as outputs:
                save_json(path=outputs.add(cfg.root_dir / cfg.report_file), data=report.model_dump())
                leaf_path = outputs.add(cfg.root_dir / cfg.leaf_order_file)
                np.savetxt(leaf_path, order + 1, fmt="%d")
                save_run_params(outputs.add(cfg.root_dir / "run_params.yaml"), cfg)

            logger.info(
                f"kNN {report.knn_mean:.3f} +- {report.knn_std:.3f}, "
                f"silhouette {report.silhouette:.3f}"
            )

            if cfg.tracking_enabled:
                self.log_into_mlflow(report)

            return report

        except Exception as e:
            raise CustomException(e, sys)
