"""
Centralized logging configuration for gmot.

Usage:
    from src.utils.logger import get_logger
    logger = get_logger(__name__, headline="cli distance")
    logger.info("Fitting mixtures for 80 graphs")

The log directory defaults to `logs/` and can be moved with `GMOT_LOG_DIR`.
"""

import logging
import os
from datetime import datetime
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

LOGS_DIR = Path(os.getenv("GMOT_LOG_DIR", "logs"))
LOGS_DIR.mkdir(parents=True, exist_ok=True)
LOG_FILE = LOGS_DIR / "runs.log"

_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"


def get_logger(
    name: Optional[str] = None, headline: Optional[str] = None
) -> logging.Logger:
    """
    Returns a configured logger with consistent formatting.

    Only one set of handlers is attached per logger name, so modules can call
    this at import time without duplicating output.

    Args:
        name (Optional[str]): Logger name, typically __name__.
        headline (Optional[str]): Optional headline written to the log file to
            separate runs (e.g. the CLI subcommand).

    Returns:
        logging.Logger: Configured logger instance.
    """
    logger = logging.getLogger(name)
    logger.setLevel(logging.INFO)

    if not logger.handlers:
        formatter = logging.Formatter(_FORMAT, datefmt="%Y-%m-%d %H:%M")

        file_handler = RotatingFileHandler(
            LOG_FILE,
            maxBytes=5_000_000,
            backupCount=5,
            encoding="utf-8",
        )
        file_handler.setFormatter(formatter)

        try:
            from rich.logging import RichHandler

            console_handler: logging.Handler = RichHandler(
                rich_tracebacks=True, markup=False
            )
            console_handler.setFormatter(logging.Formatter("%(message)s"))
        except ImportError:
            console_handler = logging.StreamHandler()
            console_handler.setFormatter(formatter)

        logger.addHandler(file_handler)
        logger.addHandler(console_handler)
        logger.propagate = False

    if headline:
        with open(LOG_FILE, "a", encoding="utf-8") as f:
            f.write(
                f"\n\n========================= START: {headline} "
                f"({datetime.now():%Y-%m-%d %H:%M}) =========================\n"
            )

    return logger


def log_spacer() -> None:
    """Appends a raw newline to the log file, without the formatter prefix."""
    with open(LOG_FILE, "a", encoding="utf-8") as f:
        f.write("\n")
