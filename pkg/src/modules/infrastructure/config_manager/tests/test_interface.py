"""
Interface tests for config_manager.

Tests the public API contract.
"""

import dataclasses

import pytest
import yaml
from ..interface import (
    ConfigManagerInterface,
    create_interface,
    ConfigManagerError,
    ConfigNotFoundError,
    ConfigValidationError,
    RunConfig,
    SEED_ENV_VAR,
    validate_run_config,
)


class TestConfigManagerInterface:
    """Test suite for ConfigManagerInterface."""

    @pytest.fixture
    def config(self):
        """Standard test configuration."""
        return {
            "run": {"epsilon": 1e-4, "seed": 7, "mode": "modal"},
            "logging": {"log_level": "INFO"},
        }

    @pytest.fixture
    def interface(self, config, monkeypatch):
        """Create interface instance for testing."""
        monkeypatch.delenv(SEED_ENV_VAR, raising=False)
        return create_interface(config)

    # ------------------------------------------------------------------
    # Creation
    # ------------------------------------------------------------------

    def test_create_with_config(self, config):
        """Interface creates successfully with provided config."""
        iface = create_interface(config)
        assert isinstance(iface, ConfigManagerInterface)

    def test_create_with_defaults(self):
        """Interface creates with default (empty) config."""
        iface = create_interface()
        assert isinstance(iface, ConfigManagerInterface)

    # ------------------------------------------------------------------
    # load_config
    # ------------------------------------------------------------------

    def test_load_config_from_file(self, tmp_path):
        """load_config reads YAML file and merges into data."""
        cfg_file = tmp_path / "fdea.yaml"
        cfg_file.write_text(yaml.dump({"run": {"population_multiplier": 10}}))

        iface = create_interface()
        result = iface.load_config(str(cfg_file))

        assert result["run"]["population_multiplier"] == 10

    def test_load_config_file_not_found_raises(self):
        """load_config raises ConfigNotFoundError for missing file."""
        iface = create_interface()
        with pytest.raises(ConfigNotFoundError):
            iface.load_config("/nonexistent/path/fdea.yaml")

    def test_load_config_non_mapping_raises(self, tmp_path):
        """A YAML list at the top level is rejected."""
        cfg_file = tmp_path / "list.yaml"
        cfg_file.write_text("- 1\n- 2\n")
        with pytest.raises(ConfigValidationError):
            create_interface().load_config(str(cfg_file))

    # ------------------------------------------------------------------
    # get / set
    # ------------------------------------------------------------------

    def test_get_with_dotted_path(self, interface):
        """get retrieves nested value using dotted key path."""
        assert interface.get("run.mode") == "modal"

    def test_get_returns_default_for_missing_key(self, interface):
        """get returns default when key does not exist."""
        assert interface.get("run.missing", "fallback") == "fallback"

    def test_set_creates_intermediate_keys(self):
        """set creates intermediate dicts for deep paths."""
        iface = create_interface()
        iface.set("a.b.c", 42)
        assert iface.get("a.b.c") == 42

    # ------------------------------------------------------------------
    # save_config
    # ------------------------------------------------------------------

    def test_save_config_creates_directories(self, interface, tmp_path):
        """save_config writes YAML, creating parent directories."""
        out_path = tmp_path / "subdir" / "deep" / "output.yaml"
        interface.save_config(str(out_path))

        saved = yaml.safe_load(out_path.read_text())
        assert saved["run"]["seed"] == 7

    def test_get_module_config_missing_returns_empty(self, interface):
        """get_module_config returns empty dict for unknown section."""
        assert interface.get_module_config("nonexistent") == {}

    # ------------------------------------------------------------------
    # get_run_config
    # ------------------------------------------------------------------

    def test_run_config_defaults(self, monkeypatch):
        """An empty manager yields the documented defaults."""
        monkeypatch.delenv(SEED_ENV_VAR, raising=False)
        run = create_interface().get_run_config()
        assert run == RunConfig()
        assert run.epsilon == 1e-5
        assert run.seed == 42
        assert run.population_multiplier == 100
        assert run.mode == "per_bound"

    def test_run_config_reads_section(self, interface):
        """Values from the 'run' section override defaults."""
        run = interface.get_run_config()
        assert run.epsilon == 1e-4
        assert run.seed == 7
        assert run.mode == "modal"

    def test_env_seed_overrides_file(self, interface, monkeypatch):
        """FDEA_SEED beats the file value."""
        monkeypatch.setenv(SEED_ENV_VAR, "99")
        assert interface.get_run_config().seed == 99

    def test_overrides_beat_env(self, interface, monkeypatch):
        """Explicit overrides win over the environment; None is ignored."""
        monkeypatch.setenv(SEED_ENV_VAR, "99")
        run = interface.get_run_config({"seed": 3, "mode": None})
        assert run.seed == 3
        assert run.mode == "modal"

    def test_bad_env_seed_raises(self, interface, monkeypatch):
        """A non-integer FDEA_SEED is a validation error."""
        monkeypatch.setenv(SEED_ENV_VAR, "abc")
        with pytest.raises(ConfigValidationError):
            interface.get_run_config()

    @pytest.mark.parametrize("override", [
        {"epsilon": 0.0},
        {"epsilon": -1e-5},
        {"population_multiplier": 0},
        {"mode": "exact"},
        {"orientation": "sideways"},
        {"output_format": "xml"},
        {"solver": "cplex"},
        {"workers": 0},
        {"seed": 1.5},
        {"unknown_option": 1},
    ])
    def test_invalid_run_options_rejected(self, interface, override):
        """Out-of-range or unknown options raise ConfigValidationError."""
        with pytest.raises(ConfigValidationError):
            interface.get_run_config(override)

    def test_validate_returns_true(self, interface):
        """validate returns True for a valid configuration."""
        assert interface.validate() is True

    def test_validate_raises_on_bad_run_section(self):
        """validate surfaces run-section problems."""
        iface = create_interface({"run": {"epsilon": 0}})
        with pytest.raises(ConfigValidationError):
            iface.validate()

    def test_run_config_save_load(self, tmp_path):
        """RunConfig persists to YAML and reloads identically."""
        run = RunConfig(seed=5, mode="literal", workers=2)
        path = tmp_path / "cfg" / "run.yaml"
        run.save(str(path))
        assert RunConfig.load(str(path)) == run

    def test_validate_run_config_direct(self):
        """validate_run_config passes a valid RunConfig through and rejects a bad one."""
        run = RunConfig(seed=3)
        assert validate_run_config(run) is run
        with pytest.raises(ConfigValidationError):
            validate_run_config(dataclasses.replace(run, classify_tol=-1.0))

    def test_zero_classify_tol_accepted(self, interface):
        """classify_tol 0 means exact comparison up to solver round-off."""
        assert interface.get_run_config({"classify_tol": 0}).classify_tol == 0
        assert validate_run_config(RunConfig(classify_tol=0.0)).classify_tol == 0.0

    # ------------------------------------------------------------------
    # cleanup
    # ------------------------------------------------------------------

    def test_method_after_cleanup_raises(self, interface):
        """Methods raise ConfigManagerError after cleanup."""
        interface.cleanup()
        with pytest.raises(ConfigManagerError):
            interface.get("run.seed")
        with pytest.raises(ConfigManagerError):
            interface.get_run_config()
