"""
Stage 01: Dataset Generation Pipeline.

This module coordinates sampling the labelled synthetic graph dataset, interfacing between the
ConfigurationManager and the DatasetGeneration component.
"""

import sys

from src.components.dataset_generation import DatasetGeneration
from src.config.configuration import ConfigurationManager
from src.utils.exception import CustomException
from src.utils.logger import get_logger

STAGE_NAME = "Dataset Generation stage"
logger = get_logger(__name__)


class DatasetGenerationPipeline:
    """
    Orchestrates the Dataset Generation stage of the gmot pipeline.
    """

    def __init__(self, config_manager: ConfigurationManager | None = None):
        self.config_manager = config_manager

    def main(self):
        """
        Executes the dataset generation stage.
        """
        config = self.config_manager or ConfigurationManager()
        stage_config = config.get_dataset_generation_config()
        DatasetGeneration(config=stage_config).generate()


if __name__ == "__main__":
    try:
        logger.info(f"🚀 {STAGE_NAME} started 🚀")
        obj = DatasetGenerationPipeline()
        obj.main()
        logger.info(f"✅ {STAGE_NAME} completed ✅")
    except Exception as e:
        logger.error(CustomException(e, sys))
        raise e
