"""
Common utility functions shared by the stages and the CLI.

YAML/JSON reading and writing, directory creation, and `OutputTracker`, which
removes partially written outputs when a command fails.
"""

import json
import os
from dataclasses import asdict
from pathlib import Path

import yaml
from box import ConfigBox
from box.exceptions import BoxValueError
from ensure import ensure_annotations

from src.utils.exception import ArtifactError
from src.utils.logger import get_logger

logger = get_logger(__name__)


@ensure_annotations
def read_yaml(path_to_yaml: Path) -> ConfigBox:
    """Reads a YAML file and returns its content as a ConfigBox.

    Args:
        path_to_yaml (Path): Path to the YAML file.

    Returns:
        ConfigBox: YAML content with attribute access (e.g. params.embedding.colors).

    Raises:
        ValueError: If the YAML file is empty.
    """
    try:
        with open(path_to_yaml) as yaml_file:
            content = yaml.safe_load(yaml_file)
            logger.info(f"yaml file: {path_to_yaml} loaded successfully")
            return ConfigBox(content)
    except BoxValueError:
        raise ValueError(f"yaml file is empty: {path_to_yaml}")


@ensure_annotations
def write_yaml(path: Path, data: dict):
    """Writes a plain dict as YAML (used for the resolved run parameters)."""
    with open(path, "w") as f:
        yaml.safe_dump(data, f, sort_keys=False)
    logger.info(f"yaml file saved at: {path}")


@ensure_annotations
def create_directories(path_to_directories: list, verbose: bool = True):
    """Creates a list of directories if they do not already exist.

    Args:
        path_to_directories (list): List of paths to create.
        verbose (bool, optional): Whether to log each directory. Defaults to True.
    """
    for path in path_to_directories:
        try:
            os.makedirs(path, exist_ok=True)
        except OSError as e:
            raise ArtifactError(f"cannot create directory: {e.strerror}", path)
        if verbose:
            logger.info(f"created directory at: {path}")


@ensure_annotations
def save_json(path: Path, data: dict):
    """Saves a dict as indented JSON."""
    with open(path, "w") as f:
        json.dump(data, f, indent=4)

    logger.info(f"json file saved at: {path}")


@ensure_annotations
def load_json(path: Path) -> dict:
    """Loads a JSON object, raising ArtifactError when missing or malformed."""
    try:
        with open(path) as f:
            return json.load(f)
    except FileNotFoundError:
        raise ArtifactError("json file not found", path)
    except json.JSONDecodeError as e:
        raise ArtifactError(f"malformed json: {e.msg}", path)


class OutputTracker:
    """
    Records the files a command writes and deletes them if the command fails.

    Usage:
        with OutputTracker() as outputs:
            path = outputs.add(out_dir / "distances.csv")
            frame.to_csv(path)
    """

    def __init__(self):
        self.paths: list[Path] = []

    def add(self, path: Path) -> Path:
        self.paths.append(Path(path))
        return Path(path)

    def __enter__(self) -> "OutputTracker":
        return self

    def __exit__(self, exc_type, exc, tb) -> bool:
        if exc_type is not None:
            for path in self.paths:
                if path.is_file():
                    path.unlink()
                    logger.warning(f"removed partial output: {path}")
        return False


def save_run_params(path: Path, config) -> Path:
    """Writes a (nested) config dataclass as YAML, paths as strings."""

    def plain(value):
        if isinstance(value, Path):
            return str(value)
        if isinstance(value, (list, tuple)):
            return [plain(v) for v in value]
        if isinstance(value, dict):
            return {k: plain(v) for k, v in value.items()}
        return value

    write_yaml(path=Path(path), data=plain(asdict(config)))
    return Path(path)
