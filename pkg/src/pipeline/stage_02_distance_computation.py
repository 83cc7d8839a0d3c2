"""
Stage 02: Distance Computation Pipeline.

This module coordinates computing the dataset distance matrix, interfacing between the
ConfigurationManager and the DistanceComputation component.
"""

import sys

from src.components.distance_computation import DistanceComputation
from src.config.configuration import ConfigurationManager
from src.utils.exception import CustomException
from src.utils.logger import get_logger

STAGE_NAME = "Distance Computation stage"
logger = get_logger(__name__)


class DistanceComputationPipeline:
    """
    Orchestrates the Distance Computation stage of the gmot pipeline.
    """

    def __init__(self, config_manager: ConfigurationManager | None = None):
        self.config_manager = config_manager

    def main(self):
        """
        Executes the distance computation stage.
        """
        config = self.config_manager or ConfigurationManager()
        stage_config = config.get_distance_config()
        DistanceComputation(config=stage_config).compute()


if __name__ == "__main__":
    try:
        logger.info(f"🚀 {STAGE_NAME} started 🚀")
        obj = DistanceComputationPipeline()
        obj.main()
        logger.info(f"✅ {STAGE_NAME} completed ✅")
    except Exception as e:
        logger.error(CustomException(e, sys))
        raise e
