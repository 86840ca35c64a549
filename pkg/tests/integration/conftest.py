"""Integration test fixtures. Test cross-module interactions."""
import pytest

from src.modules.frontend.cli import load_dataset


@pytest.fixture
def guo_tanaka(guo_tanaka_path):
    return load_dataset(guo_tanaka_path)


@pytest.fixture
def iim(iim_path):
    return load_dataset(iim_path)


@pytest.fixture
def infrastructure_config():
    """Config for infrastructure layer integration tests."""
    return {
        "run": {"seed": 11, "mode": "per_bound", "log_level": "DEBUG"},
    }
