"""
Logging configuration for the graph-spectra toolkit.

Results go to stdout; every log record goes to stderr or to a file, so
``--json`` output can be piped without filtering.
"""
import logging
import sys
from datetime import datetime
from pathlib import Path

QUIET_LOGGERS = ("langgraph", "langchain_core", "asyncio")


def _resolve_level(level) -> int:
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(str(level).upper())
    if not isinstance(resolved, int):
        raise ValueError(f"unknown log level {level!r}")
    return resolved


def setup_logging(log_level=logging.WARNING, log_to_file=False, log_dir="logs"):
    """
    Configure the root logger for one CLI run or test session.

    The console handler writes to stderr at ``log_level``. With ``log_to_file``
    a second handler records everything from DEBUG up in
    ``<log_dir>/graph_spectra_<timestamp>.log``, so a quiet console run still
    leaves the per-stage timings and split decisions on disk. The root level
    is the lower of the two handler levels.

    Args:
        log_level: console level, a name such as "INFO" or a logging constant
        log_to_file: also keep a detailed DEBUG log file
        log_dir: directory for the log file, created on demand

    Returns:
        logging.Logger: the configured root logger

    Raises:
        ValueError: if ``log_level`` names no logging level
    """
    console_level = _resolve_level(log_level)

    root_logger = logging.getLogger()
    root_logger.handlers = []
    root_logger.setLevel(logging.DEBUG if log_to_file else console_level)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(logging.Formatter(fmt="%(levelname)s - %(message)s"))
    root_logger.addHandler(console_handler)

    if log_to_file:
        directory = Path(log_dir)
        directory.mkdir(parents=True, exist_ok=True)
        log_file = directory / f"graph_spectra_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log"
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(
            fmt="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        ))
        root_logger.addHandler(file_handler)
        logging.info(f"Logging to file: {log_file}")

    # Orchestration libraries log every node transition at DEBUG
    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)

    return root_logger


def get_logger(name):
    """Module logger; call with ``__name__``."""
    return logging.getLogger(name)
