"""
Root conftest.py for the fdea test suite.

Provides shared fixtures available to all test files.
"""

import os

import pytest


@pytest.fixture
def project_root():
    """Return the project root directory path."""
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture
def data_dir(project_root):
    """Directory holding the bundled datasets."""
    return os.path.join(project_root, "src", "data")


@pytest.fixture
def guo_tanaka_path(data_dir):
    return os.path.join(data_dir, "guo_tanaka.csv")


@pytest.fixture
def iim_path(data_dir):
    return os.path.join(data_dir, "iim.csv")


@pytest.fixture(autouse=True)
def no_env_seed(monkeypatch):
    """Keep a developer's FDEA_SEED out of the suite."""
    monkeypatch.delenv("FDEA_SEED", raising=False)
