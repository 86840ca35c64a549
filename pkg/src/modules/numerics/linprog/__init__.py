"""
Module: linprog
Layer: numerics

Dense linear programs and the two-phase simplex solver.
"""

from .interface import (
    create_interface,
    solve,
    SolverInterface,
    SimplexSolver,
    HighsSolver,
    LinearProgram,
    Constraint,
    LPSolution,
    LPStatus,
    Sense,
    Relation,
    LinprogError,
    LinprogInputError,
    LinprogIterationError,
)

__all__ = [
    "create_interface",
    "solve",
    "SolverInterface",
    "SimplexSolver",
    "HighsSolver",
    "LinearProgram",
    "Constraint",
    "LPSolution",
    "LPStatus",
    "Sense",
    "Relation",
    "LinprogError",
    "LinprogInputError",
    "LinprogIterationError",
]
