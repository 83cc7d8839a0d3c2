"""
Dataset Generation Component.

This module handles the first stage of the gmot pipeline:
- Sampling `graphs_per_model` random graphs from each generative model.
- Writing every graph as a 1-based edge list.
- Writing the labels manifest (file name -> model class) next to them.
"""

import sys
from pathlib import Path

from src.entity.artifact_schemas import DatasetManifest
from src.entity.config_entity import DatasetGenerationConfig
from src.graph.generators import generate_dataset
from src.graph.io import write_edge_list
from src.utils.common import OutputTracker, save_json, save_run_params
from src.utils.exception import CustomException
from src.utils.logger import get_logger

logger = get_logger(__name__)

EDGE_LIST_SUFFIX = ".edges"


class DatasetGeneration:
    """
    Generates the labelled synthetic graph dataset.
    """

    def __init__(self, config: DatasetGenerationConfig):
        """
        Initializes the DatasetGeneration component with configuration.

        Args:
            config (DatasetGenerationConfig): Models, sizes, seed and output directory.
        """
        self.config = config

    def generate(self) -> Path:
        """
        Samples the dataset and writes edge lists plus manifest.

        Returns:
            Path: The manifest file.

        Raises:
            CustomException: If sampling or writing fails; files written so far
                are removed.
        """
        try:
            cfg = self.config
            dataset = generate_dataset(
                models=cfg.models,
                graphs_per_model=cfg.graphs_per_model,
                n_range=(cfg.n_min, cfg.n_max),
                expected_degree=cfg.expected_degree,
                seed=cfg.seed,
                rewire_prob=cfg.rewire_prob,
            )

            with OutputTracker() as outputs:
                entries = {}
                for name, label, graph in dataset:
                    file_name = f"{name}{EDGE_LIST_SUFFIX}"
                    write_edge_list(graph, outputs.add(cfg.root_dir / file_name))
                    entries[file_name] = label

                manifest = DatasetManifest(entries)
                manifest_path = outputs.add(cfg.root_dir / cfg.manifest_file)
                save_json(path=manifest_path, data=manifest.model_dump())
                save_run_params(outputs.add(cfg.root_dir / "run_params.yaml"), cfg)

            logger.info(
                f"Generated {len(entries)} graphs ({', '.join(cfg.models)}) in {cfg.root_dir}"
            )
            return manifest_path

        except Exception as e:
            raise CustomException(e, sys)
