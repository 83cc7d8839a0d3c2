"""
Stage 03: Distance Evaluation Pipeline.

This module coordinates scoring a distance matrix, interfacing between the
ConfigurationManager and the DistanceEvaluation component.
"""

import sys

from src.components.distance_evaluation import DistanceEvaluation
from src.config.configuration import ConfigurationManager
from src.utils.exception import CustomException
from src.utils.logger import get_logger

STAGE_NAME = "Distance Evaluation stage"
logger = get_logger(__name__)


class DistanceEvaluationPipeline:
    """
    Orchestrates the Distance Evaluation stage of the gmot pipeline.
    """

    def __init__(self, config_manager: ConfigurationManager | None = None):
        self.config_manager = config_manager

    def main(self):
        """
        Executes the distance evaluation stage.
        """
        config = self.config_manager or ConfigurationManager()
        stage_config = config.get_evaluation_config()
        DistanceEvaluation(config=stage_config).run()


if __name__ == "__main__":
    try:
        logger.info(f"🚀 {STAGE_NAME} started 🚀")
        obj = DistanceEvaluationPipeline()
        obj.main()
        logger.info(f"✅ {STAGE_NAME} completed ✅")
    except Exception as e:
        logger.error(CustomException(e, sys))
        raise e
