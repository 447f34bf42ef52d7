"""
Centralized logging configuration for ConeCheck

Console output goes to stderr so that JSON reports on stdout stay parseable.
"""
import logging
import sys
from typing import Optional
from pathlib import Path

ROOT_LOGGER = "conecheck"


class _SingleLineFormatter(logging.Formatter):
    """Formatter that keeps every record on one line"""

    def __init__(self, fmt: str, datefmt: Optional[str] = None, json_format: bool = False):
        super().__init__(fmt, datefmt=datefmt)
        self.json_format = json_format

    def format(self, record: logging.LogRecord) -> str:
        message = record.getMessage()
        if self.json_format:
            message = message.replace("\\", "\\\\").replace('"', '\\"')
        if record.exc_info and not record.exc_text:
            record.exc_text = self.formatException(record.exc_info)
        exc_text = record.exc_text
        safe = logging.makeLogRecord(record.__dict__)
        safe.msg = message.replace("\r", "\\r").replace("\n", "\\n")
        safe.args = None
        safe.exc_info = None
        safe.exc_text = None
        line = super().format(safe)
        if exc_text:
            escaped = exc_text.replace("\n", "\\n")
            if self.json_format:
                escaped = escaped.replace('"', '\\"')
                line = line[:-1] + f',"exception":"{escaped}"}}'
            else:
                line = f"{line} | {escaped}"
        return line


class LogConfig:
    """Logging configuration manager"""

    LOG_LEVELS = {
        "DEBUG": logging.DEBUG,
        "INFO": logging.INFO,
        "WARNING": logging.WARNING,
        "ERROR": logging.ERROR,
        "CRITICAL": logging.CRITICAL,
    }

    @classmethod
    def setup_logging(
        cls,
        level: str = "INFO",
        log_file: Optional[Path] = None,
        json_format: bool = False
    ) -> logging.Logger:
        """
        Set up application logging

        Args:
            level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            log_file: Optional file path for logs
            json_format: Emit one JSON object per line

        Returns:
            Configured logger instance
        """
        log_level = cls.LOG_LEVELS.get(level.upper(), logging.INFO)

        logger = logging.getLogger(ROOT_LOGGER)
        logger.setLevel(log_level)
        logger.handlers.clear()
        logger.propagate = False

        if json_format:
            formatter = _SingleLineFormatter(
                '{"time":"%(asctime)s","level":"%(levelname)s","module":"%(name)s",'
                '"function":"%(funcName)s","line":%(lineno)d,"message":"%(message)s"}',
                json_format=True,
            )
        else:
            formatter = _SingleLineFormatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S'
            )

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(log_level)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        if log_file:
            log_file = Path(log_file)
            log_file.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(log_level)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        return logger


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance for a module

    Args:
        name: Logger name (usually __name__)

    Returns:
        Logger instance

    Example:
        >>> logger = get_logger(__name__)
        >>> logger.info("Suite started")
    """
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
