"""Log sink setup for the CLI and the test suite."""

import sys

from loguru import logger

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} | {message}"


def configure_logging(level: str = "INFO") -> int:
    """
    Send logs to stderr only, so JSON reports on stdout stay clean.

    Returns:
        The loguru handler id of the new sink
    """
    logger.remove()
    return logger.add(sys.stderr, format=LOG_FORMAT, level=level.upper())
