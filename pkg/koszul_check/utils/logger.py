"""
Logging utility for Koszul Check.

Log lines go to stderr so that stdout carries nothing but the report.
"""

import logging
import sys
from typing import Optional

logger = logging.getLogger("koszul_check")
logger.setLevel(logging.INFO)
logger.propagate = False


class _ConsoleFormatter(logging.Formatter):
    """Plain messages for progress, a level prefix for anything worse."""

    def format(self, record: logging.LogRecord) -> str:
        message = super().format(record)
        if record.levelno >= logging.WARNING:
            return f"{record.levelname.lower()}: {message}"
        return message


console_handler = logging.StreamHandler(sys.stderr)
console_handler.setFormatter(_ConsoleFormatter("%(message)s"))
logger.addHandler(console_handler)

_file_handler: Optional[logging.FileHandler] = None


def _follow_stderr():
    """Point the console handler at the current sys.stderr.

    The previous stream may already be closed, so it is not flushed.
    """
    console_handler.acquire()
    try:
        console_handler.stream = sys.stderr
    finally:
        console_handler.release()


def configure_logger(verbose: bool = False, log_file: Optional[str] = None):
    """Set the level and the optional log file for this run.

    Calling it again replaces the previous configuration.

    Args:
        verbose: If True, log every computation step (DEBUG)
        log_file: Path of a file that receives a timestamped copy of the log
    """
    global _file_handler

    level = logging.DEBUG if verbose else logging.INFO
    logger.setLevel(level)
    console_handler.setLevel(level)
    _follow_stderr()

    if _file_handler is not None:
        logger.removeHandler(_file_handler)
        _file_handler.close()
        _file_handler = None
    if log_file:
        _file_handler = logging.FileHandler(log_file, encoding="utf-8")
        _file_handler.setLevel(level)
        _file_handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        logger.addHandler(_file_handler)


def debug(message: str):
    logger.debug(message)


def info(message: str):
    logger.info(message)


def warning(message: str):
    logger.warning(message)


def error(message: str):
    """Log an error; the CLI exits with status 1 after reporting one."""
    logger.error(message)
