"""
Module: config_manager
Layer: infrastructure

Configuration loading, validation, and persistence using YAML.
"""

from .interface import (
    create_interface,
    ConfigManagerInterface,
    ConfigManagerError,
    ConfigNotFoundError,
    ConfigValidationError,
    RunConfig,
    validate_run_config,
    SEED_ENV_VAR,
    VALID_MODES,
    VALID_ORIENTATIONS,
    VALID_FORMATS,
    VALID_SOLVERS,
    VALID_LOG_FORMATS,
)

__all__ = [
    "create_interface",
    "ConfigManagerInterface",
    "ConfigManagerError",
    "ConfigNotFoundError",
    "ConfigValidationError",
    "RunConfig",
    "validate_run_config",
    "SEED_ENV_VAR",
    "VALID_MODES",
    "VALID_ORIENTATIONS",
    "VALID_FORMATS",
    "VALID_SOLVERS",
    "VALID_LOG_FORMATS",
]
