"""
Main entry point for the gmot pipeline.

Runs dataset generation, distance computation and evaluation in sequence from
config/config.yaml and config/params.yaml (the same stages as dvc.yaml).

Usage:
    uv run python main.py
"""

import sys

from src.pipeline.stage_01_dataset_generation import DatasetGenerationPipeline
from src.pipeline.stage_02_distance_computation import DistanceComputationPipeline
from src.pipeline.stage_03_distance_evaluation import DistanceEvaluationPipeline
from src.utils.exception import CustomException
from src.utils.logger import get_logger, log_spacer

logger = get_logger(__name__, headline="main.py")

STAGES = [
    ("Dataset Generation stage", DatasetGenerationPipeline),
    ("Distance Computation stage", DistanceComputationPipeline),
    ("Distance Evaluation stage", DistanceEvaluationPipeline),
]

if __name__ == "__main__":
    for STAGE_NAME, pipeline in STAGES:
        try:
            logger.info(f"🚀 {STAGE_NAME} started 🚀")
            pipeline().main()
            logger.info(f"✅ {STAGE_NAME} completed ✅")
        except Exception as e:
            logger.error(CustomException(e, sys))
            sys.exit(1)

        log_spacer()
