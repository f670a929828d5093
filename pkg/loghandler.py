import os
import glob
import logging
from datetime import datetime
from typing import Optional, Tuple

ROOT_LOGGER_NAME = "cactuskit"
RESULTS_HEADER = "command,label,method,n,m,kept,deletions,seconds"

_results_logger: Optional[logging.Logger] = None
results_file: Optional[str] = None


def setup_logging(log_dir: Optional[str] = "logs", clear_old: bool = False, debug: bool = False) -> Tuple[logging.Logger, Optional[str]]:
    """Configure the toolkit logger once per CLI run.

    Messages go to stderr (stdout carries results only) and, when log_dir is
    set, to a timestamped file. Returns (logger, results csv path or None).
    """
    global _results_logger, results_file

    logger = logging.getLogger(ROOT_LOGGER_NAME)
    logger.setLevel(logging.DEBUG if debug else logging.INFO)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter("%(asctime)s [%(levelname)s] %(message)s")
    stream = logging.StreamHandler()
    stream.setFormatter(formatter)
    logger.addHandler(stream)
    logger.propagate = False

    results_file = None
    _results_logger = None
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        if clear_old:
            clear_old_logs(log_dir)

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        general_log_file = os.path.join(log_dir, f"cactuskit_{timestamp}.log")
        results_file = os.path.join(log_dir, f"results_{timestamp}.csv")

        file_handler = logging.FileHandler(general_log_file, encoding="utf-8")
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
        logger.debug(f"Log file created: {general_log_file}")
        logger.debug(f"Run results will be written to: {results_file}")

        # Results logger (no timestamps, file only)
        _results_logger = logging.getLogger(f"{ROOT_LOGGER_NAME}.results")
        _results_logger.setLevel(logging.INFO)
        for handler in list(_results_logger.handlers):
            _results_logger.removeHandler(handler)
            handler.close()
        results_handler = logging.FileHandler(results_file, encoding="utf-8")
        results_handler.setFormatter(logging.Formatter("%(message)s"))
        _results_logger.addHandler(results_handler)
        _results_logger.propagate = False
        _results_logger.info(RESULTS_HEADER)

    logger.debug(f"Logging level set to: {'DEBUG' if debug else 'INFO'}")
    return logger, results_file


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Named child of the toolkit logger; safe to call before setup_logging()."""
    if not name:
        return logging.getLogger(ROOT_LOGGER_NAME)
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")


def log_result(command: str, label: str, method: str, n: int, m: int, kept: int, deletions: int, seconds: float) -> None:
    """Append one CSV row to the results file; no-op when file logging is off."""
    if _results_logger is None:
        return
    _results_logger.info(f"{command},{label},{method},{n},{m},{kept},{deletions},{seconds:.4f}")


def clear_old_logs(log_dir: str) -> int:
    if not os.path.exists(log_dir):
        return 0

    patterns = ["*.log", "*.csv"]
    deleted = 0

    for pattern in patterns:
        for file in glob.glob(os.path.join(log_dir, pattern)):
            try:
                os.remove(file)
                deleted += 1
            except OSError as e:
                get_logger().warning(f"Failed to delete {file}: {e}")

    get_logger().info(f"Cleared {deleted} old log files.")
    return deleted
