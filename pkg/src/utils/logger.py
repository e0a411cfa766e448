"""
Logger Module
Logging utilities for casimir-kit
"""

import logging
import os
from typing import Optional

ROOT_LOGGER_NAME = "casimir_kit"
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class Logger:
    """Thin wrapper around a `logging` logger with lazy %-style arguments"""

    def __init__(self, name: str = ROOT_LOGGER_NAME, log_file: Optional[str] = None,
                 level: str = "WARNING", console: bool = True, attach_handlers: bool = True):
        self.logger = logging.getLogger(name)
        if not attach_handlers:
            return

        self.logger.setLevel(logging.DEBUG if log_file else _level(level))
        # reconfiguring replaces earlier handlers instead of stacking them
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)
            handler.close()

        # Console handler (stderr, so stdout stays pure data)
        if console:
            console_handler = logging.StreamHandler()
            console_handler.setLevel(_level(level))
            console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt='%H:%M:%S'))
            self.logger.addHandler(console_handler)

        # File handler (if specified)
        if log_file:
            directory = os.path.dirname(log_file)
            if directory:
                os.makedirs(directory, exist_ok=True)
            file_handler = logging.FileHandler(log_file)
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            self.logger.addHandler(file_handler)

        if not self.logger.handlers:
            self.logger.addHandler(logging.NullHandler())

    def info(self, message: str, *args):
        """Log info message"""
        self.logger.info(message, *args)

    def debug(self, message: str, *args):
        """Log debug message"""
        self.logger.debug(message, *args)

    def warning(self, message: str, *args):
        """Log warning message"""
        self.logger.warning(message, *args)


def _level(name: str) -> int:
    level = logging.getLevelName(str(name).upper())
    if not isinstance(level, int):
        raise ValueError(f"unknown log level {name!r}")
    return level


def get_logger(module: str) -> Logger:
    """Child logger `casimir_kit.<module>`; handlers live on the root logger"""
    return Logger(f"{ROOT_LOGGER_NAME}.{module}", attach_handlers=False)


def setup_logging(level: str = "WARNING", log_file: Optional[str] = None,
                  console: bool = True) -> Logger:
    """Configure the package root logger"""
    return Logger(ROOT_LOGGER_NAME, log_file=log_file, level=level, console=console)
