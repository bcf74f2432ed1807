import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Any, Dict, Optional

from pythonjsonlogger import jsonlogger

from utils.config import Settings, get_settings
from utils.errors import InvalidInputError

# Constants
LOGGER_NAME = "quasihelix"
MAX_BYTES = 10 * 1024 * 1024  # 10MB
BACKUP_COUNT = 5
LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"
DATE_FORMAT = "%Y-%m-%dT%H:%M:%S"


class StructuredLogger:
    """A structured logger that emits JSON records to stderr and, optionally, a file.

    Standard output is reserved for reports and data files, so the console
    handler always writes to stderr.

    Attributes:
        name (str): Name of the logger
        log_dir (str): Directory for the rotating log file, or None for console only
        level (int): Logging level
    """

    def __init__(
        self,
        name: str,
        log_dir: Optional[str] = None,
        level: int = logging.WARNING
    ):
        self.logger = logging.getLogger(name)
        self.logger.setLevel(level)
        self.logger.propagate = False

        # Prevent duplicate handlers
        if not self.logger.handlers:
            self._setup_handlers(log_dir)

    def _setup_handlers(self, log_dir: Optional[str]) -> None:
        """Set up the stderr handler and the optional rotating file handler."""
        formatter = jsonlogger.JsonFormatter(LOG_FORMAT, datefmt=DATE_FORMAT)

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        self.logger.addHandler(console_handler)

        if log_dir:
            Path(log_dir).mkdir(parents=True, exist_ok=True)
            file_handler = RotatingFileHandler(
                Path(log_dir) / f"{self.logger.name}.log",
                maxBytes=MAX_BYTES,
                backupCount=BACKUP_COUNT,
                encoding="utf-8"
            )
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

    def set_level(self, level: int) -> None:
        self.logger.setLevel(level)

    def info(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        """Log an info message."""
        self.logger.info(message, extra=extra or {})

    def error(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        """Log an error message."""
        self.logger.error(message, extra=extra or {})

    def warning(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        """Log a warning message."""
        self.logger.warning(message, extra=extra or {})

    def debug(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        """Log a debug message."""
        self.logger.debug(message, extra=extra or {})

    def critical(self, message: str, extra: Optional[Dict[str, Any]] = None) -> None:
        """Log a critical message."""
        self.logger.critical(message, extra=extra or {})


def _build_default_logger() -> StructuredLogger:
    try:
        settings = get_settings()
    except InvalidInputError:
        # the CLI reports the bad variable itself
        settings = Settings()
    level = logging.getLevelName(settings.log_level.upper())
    if not isinstance(level, int):
        level = logging.WARNING
    return StructuredLogger(LOGGER_NAME, log_dir=settings.log_dir, level=level)


# Create a default logger instance
logger = _build_default_logger()
