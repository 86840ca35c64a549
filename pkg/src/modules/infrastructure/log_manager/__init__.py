"""
Module: log_manager
Layer: infrastructure

Structured logging infrastructure.
"""

from .interface import create_interface, LogManagerInterface, LogManagerError, ROOT_LOGGER

__all__ = ["create_interface", "LogManagerInterface", "LogManagerError", "ROOT_LOGGER"]
