"""
Environment-aware settings: the run seed and the optional MLflow tracking URI.

Values are resolved with a clear priority: environment variables (a `.env` file
is loaded first), then config/params.yaml, then a built-in fallback.
"""

import os
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv

from src.constants import PARAMS_FILE_PATH
from src.utils.exception import DomainError
from src.utils.logger import get_logger

load_dotenv()

logger = get_logger(__name__)

SEED_ENV_VAR = "GMOT_SEED"
DEFAULT_SEED = 0


def _read_params(params_path: Path) -> dict:
    if not Path(params_path).exists():
        return {}
    try:
        with open(params_path, "r") as f:
            return yaml.safe_load(f) or {}
    except Exception as e:
        logger.warning(f"Error reading {params_path}: {e}")
        return {}


def get_run_seed(configured: Optional[int] = None) -> int:
    """
    Returns the seed governing a whole run.

    Priority:
        1. Environment variable GMOT_SEED
        2. The configured value (`seed` in config/params.yaml)
        3. DEFAULT_SEED

    An explicit `--seed` on the command line bypasses this lookup.

    Raises:
        DomainError: If the resolved seed is not a non-negative integer.
    """
    raw = os.getenv(SEED_ENV_VAR)
    source = f"environment ({SEED_ENV_VAR})"
    if raw is None and configured is not None:
        raw, source = configured, "configuration"
    if raw is None:
        raw, source = DEFAULT_SEED, "default"

    try:
        seed = int(raw)
    except (TypeError, ValueError):
        raise DomainError(f"seed from {source} is not an integer: {raw!r}")
    if seed < 0:
        raise DomainError(f"seed from {source} must be non-negative, got {seed}")

    logger.info(f"Using run seed {seed} from {source}")
    return seed


def get_mlflow_uri(params_path: Path = PARAMS_FILE_PATH) -> str:
    """
    Returns the MLflow tracking URI used when tracking is enabled.

    Priority:
        1. Environment variable MLFLOW_TRACKING_URI
        2. `tracking.uri` in config/params.yaml
        3. Local file store `file:./mlruns`
    """
    uri = os.getenv("MLFLOW_TRACKING_URI")
    if uri:
        logger.info(f"Using MLflow URI from environment: {uri}")
        return uri

    tracking = _read_params(params_path).get("tracking") or {}
    if tracking.get("uri"):
        logger.info(f"Using MLflow URI from {params_path}: {tracking['uri']}")
        return tracking["uri"]

    return "file:./mlruns"
