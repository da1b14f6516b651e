"""
Centralized logging utilities for massbound.

This module provides standardized logging functions and configurations
to ensure consistent logging across the kernels, the bound evaluators
and the command-line front end.
"""

import logging
import os
import sys
from typing import Dict, Optional, Union

# Default log format
DEFAULT_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"
DEFAULT_LEVEL = logging.INFO


class LoggerManager:
    """
    Manages logger instances across the application.

    Provides methods to create and retrieve loggers with consistent formatting.
    Log records go to stderr; stdout is reserved for CSV/JSON command output.
    """

    _instance = None
    _loggers: Dict[str, logging.Logger] = {}

    def __new__(cls):
        """Singleton pattern implementation."""
        if cls._instance is None:
            cls._instance = super(LoggerManager, cls).__new__(cls)
            cls._instance._initialize()
        return cls._instance

    def _initialize(self):
        """Initialize logging configuration."""
        self._loggers = {}
        self._default_formatter = logging.Formatter(DEFAULT_FORMAT)

        self._handler = logging.StreamHandler(sys.stderr)
        self._handler.setFormatter(self._default_formatter)

        root_logger = logging.getLogger()
        root_logger.addHandler(self._handler)
        root_logger.setLevel(_resolve_level(os.environ.get("LOG_LEVEL", DEFAULT_LEVEL)))

    def get_logger(self, name: str) -> logging.Logger:
        """
        Get or create a logger with the specified name.

        Args:
            name: The name for the logger

        Returns:
            Logger instance
        """
        if name not in self._loggers:
            self._loggers[name] = logging.getLogger(f"massbound.{name}")
        return self._loggers[name]

    def set_level(self, level: Union[str, int]) -> None:
        """
        Change the root log level at runtime (the CLI ``--verbose`` flag).

        Args:
            level: Level name ("DEBUG", "INFO", ...) or numeric level
        """
        logging.getLogger().setLevel(_resolve_level(level))


def _resolve_level(level: Optional[Union[str, int]]) -> int:
    if isinstance(level, str):
        return getattr(logging, level.upper(), DEFAULT_LEVEL)
    if isinstance(level, int):
        return level
    return DEFAULT_LEVEL


# Global LoggerManager instance
_manager = LoggerManager()


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger with the specified name.

    Args:
        name: The name for the logger

    Returns:
        Logger instance
    """
    return _manager.get_logger(name)


def set_log_level(level: Union[str, int]) -> None:
    """Set the global log level."""
    _manager.set_level(level)
