"""
Module: config_manager
Layer: infrastructure

Configuration loading, validation, and persistence using YAML.
"""

from typing import Dict, Any, Optional
from abc import ABC, abstractmethod
import os
import yaml

from .internal.run_config import (
    RunConfig,
    VALID_MODES,
    VALID_ORIENTATIONS,
    VALID_FORMATS,
    VALID_SOLVERS,
    VALID_LOG_FORMATS,
)


SEED_ENV_VAR = "FDEA_SEED"


class ConfigManagerError(Exception):
    pass

class ConfigNotFoundError(ConfigManagerError):
    pass

class ConfigValidationError(ConfigManagerError):
    pass


class ConfigManagerInterface(ABC):
    @abstractmethod
    def __init__(self, config: Dict[str, Any]) -> None: pass

    @abstractmethod
    def load_config(self, path: str) -> Dict[str, Any]:
        """Load configuration from YAML file."""
        pass

    @abstractmethod
    def get(self, key: str, default: Any = None) -> Any:
        """Get value by dotted key path (e.g. 'run.epsilon')."""
        pass

    @abstractmethod
    def set(self, key: str, value: Any) -> None:
        """Set value by dotted key path."""
        pass

    @abstractmethod
    def save_config(self, path: str) -> None:
        """Save current configuration to YAML file."""
        pass

    @abstractmethod
    def get_module_config(self, module_name: str) -> Dict[str, Any]:
        """Get configuration section for a specific module."""
        pass

    @abstractmethod
    def validate(self) -> bool:
        """Validate current configuration. Raises ConfigValidationError."""
        pass

    @abstractmethod
    def get_run_config(self, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
        """
        Build the typed run configuration.

        Precedence: defaults < 'run' section < FDEA_SEED < overrides.
        """
        pass

    @abstractmethod
    def cleanup(self) -> None: pass


def validate_run_config(run: RunConfig) -> RunConfig:
    """Check every RunConfig field; return it unchanged when valid."""
    if isinstance(run.seed, bool) or not isinstance(run.seed, int):
        raise ConfigValidationError(f"seed must be an integer, got {run.seed!r}")
    if not isinstance(run.epsilon, (int, float)) or not run.epsilon > 0:
        raise ConfigValidationError(f"epsilon must be > 0, got {run.epsilon!r}")
    if not isinstance(run.population_multiplier, int) or run.population_multiplier < 1:
        raise ConfigValidationError(
            f"population_multiplier must be an integer >= 1, got {run.population_multiplier!r}"
        )
    if not isinstance(run.workers, int) or run.workers < 1:
        raise ConfigValidationError(f"workers must be an integer >= 1, got {run.workers!r}")
    if not isinstance(run.classify_tol, (int, float)) or run.classify_tol < 0:
        raise ConfigValidationError(f"classify_tol must be >= 0, got {run.classify_tol!r}")
    choices = (
        ("mode", run.mode, VALID_MODES),
        ("orientation", run.orientation, VALID_ORIENTATIONS),
        ("output_format", run.output_format, VALID_FORMATS),
        ("solver", run.solver, VALID_SOLVERS),
        ("log_format", run.log_format, VALID_LOG_FORMATS),
    )
    for name, value, allowed in choices:
        if value not in allowed:
            raise ConfigValidationError(
                f"{name} must be one of {', '.join(allowed)}, got {value!r}"
            )
    return run


class DefaultConfigManager(ConfigManagerInterface):
    def __init__(self, config: Dict[str, Any]) -> None:
        self._data: Dict[str, Any] = dict(config) if config else {}
        self._environ = os.environ
        self._initialized = True

    def _check(self) -> None:
        if not self._initialized:
            raise ConfigManagerError("Manager not initialized")

    def load_config(self, path: str) -> Dict[str, Any]:
        self._check()
        if not os.path.exists(path):
            raise ConfigNotFoundError(f"Config file not found: {path}")
        with open(path, 'r') as f:
            try:
                data = yaml.safe_load(f) or {}
            except yaml.YAMLError as exc:
                raise ConfigValidationError(f"Invalid YAML in {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigValidationError(f"Top level of {path} must be a mapping")
        self._data.update(data)
        return dict(self._data)

    def get(self, key: str, default: Any = None) -> Any:
        self._check()
        parts = key.split('.')
        current = self._data
        for part in parts:
            if isinstance(current, dict) and part in current:
                current = current[part]
            else:
                return default
        return current

    def set(self, key: str, value: Any) -> None:
        self._check()
        parts = key.split('.')
        current = self._data
        for part in parts[:-1]:
            if part not in current or not isinstance(current[part], dict):
                current[part] = {}
            current = current[part]
        current[parts[-1]] = value

    def save_config(self, path: str) -> None:
        self._check()
        os.makedirs(os.path.dirname(path) if os.path.dirname(path) else '.', exist_ok=True)
        with open(path, 'w') as f:
            yaml.dump(self._data, f, default_flow_style=False)

    def get_module_config(self, module_name: str) -> Dict[str, Any]:
        self._check()
        return self._data.get(module_name, {})

    def validate(self) -> bool:
        self._check()
        if not isinstance(self._data, dict):
            raise ConfigValidationError("Configuration root must be a mapping")
        self.get_run_config()
        return True

    def get_run_config(self, overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
        self._check()
        merged: Dict[str, Any] = dict(self.get_module_config("run") or {})
        env_seed = self._environ.get(SEED_ENV_VAR)
        if env_seed is not None and env_seed.strip():
            try:
                merged["seed"] = int(env_seed)
            except ValueError as exc:
                raise ConfigValidationError(
                    f"{SEED_ENV_VAR} must be an integer, got {env_seed!r}"
                ) from exc
        for key, value in (overrides or {}).items():
            if value is not None:
                merged[key] = value
        try:
            run = RunConfig.from_dict(merged)
        except TypeError as exc:
            raise ConfigValidationError(str(exc)) from exc
        return validate_run_config(run)

    def cleanup(self) -> None:
        self._initialized = False
        self._data = {}


def create_interface(config: Dict[str, Any] = None) -> ConfigManagerInterface:
    return DefaultConfigManager(config or {})
