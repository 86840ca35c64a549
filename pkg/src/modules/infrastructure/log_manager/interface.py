"""
Module: log_manager
Layer: infrastructure

Structured logging infrastructure.

Every package logger lives under the ``fdea`` namespace; handlers are attached
once to the namespace root and write to stderr so stdout stays reserved for
results.
"""

from typing import Dict, Any, List
from abc import ABC, abstractmethod
import logging
import sys

from .internal.formatters import make_formatter

ROOT_LOGGER = "fdea"
LOG_FORMATS = ("text", "json")


class LogManagerError(Exception):
    pass


class LogManagerInterface(ABC):
    @abstractmethod
    def __init__(self, config: Dict[str, Any]) -> None: pass

    @abstractmethod
    def get_logger(self, name: str) -> logging.Logger:
        """Get a named logger instance under the ``fdea.`` namespace."""
        pass

    @abstractmethod
    def set_level(self, level: str) -> None:
        """Set global log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)."""
        pass

    @abstractmethod
    def add_file_handler(self, path: str) -> None:
        """Add file output handler."""
        pass

    @abstractmethod
    def cleanup(self) -> None: pass


class DefaultLogManager(LogManagerInterface):
    def __init__(self, config: Dict[str, Any]) -> None:
        self._config = config
        self._level = self._parse_level(config.get("log_level", "WARNING"))
        log_format = config.get("log_format", "text")
        if log_format not in LOG_FORMATS:
            raise LogManagerError(f"Unknown log format: {log_format!r}")
        self._formatter = make_formatter(log_format)
        self._root = logging.getLogger(ROOT_LOGGER)
        self._root.setLevel(self._level)
        self._root.propagate = False
        self._handlers: List[logging.Handler] = []
        self._loggers: Dict[str, logging.Logger] = {}
        self._attach(logging.StreamHandler(config.get("stream") or sys.stderr))
        self._initialized = True

    @staticmethod
    def _parse_level(level: str) -> int:
        return getattr(logging, str(level).upper(), logging.WARNING)

    def _attach(self, handler: logging.Handler) -> None:
        handler.setLevel(self._level)
        handler.setFormatter(self._formatter)
        self._root.addHandler(handler)
        self._handlers.append(handler)

    def _check(self) -> None:
        if not self._initialized:
            raise LogManagerError("Manager not initialized")

    def get_logger(self, name: str) -> logging.Logger:
        self._check()
        if name not in self._loggers:
            self._loggers[name] = logging.getLogger(f"{ROOT_LOGGER}.{name}")
        return self._loggers[name]

    def set_level(self, level: str) -> None:
        self._check()
        self._level = self._parse_level(level)
        self._root.setLevel(self._level)
        for handler in self._handlers:
            handler.setLevel(self._level)

    def add_file_handler(self, path: str) -> None:
        self._check()
        self._attach(logging.FileHandler(path))

    def cleanup(self) -> None:
        for handler in self._handlers:
            self._root.removeHandler(handler)
            handler.close()
        self._handlers.clear()
        self._loggers.clear()
        self._initialized = False


def create_interface(config: Dict[str, Any] = None) -> LogManagerInterface:
    return DefaultLogManager(config or {})
