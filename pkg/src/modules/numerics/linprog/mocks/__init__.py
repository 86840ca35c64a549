"""
Mock implementations for linprog.

Use these mocks when testing modules that depend on linprog.
"""

from .mock_interface import MockSolver

__all__ = ["MockSolver"]
