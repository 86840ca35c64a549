"""
Module: linprog
Layer: numerics

Small dense linear programs with finite variable lower bounds, solved by a
built-in two-phase simplex or, optionally, by SciPy's HiGHS backend.

Infeasible and unbounded programs are reported through LPSolution.status;
exceptions are reserved for malformed input and iteration-cap exhaustion.
"""

from typing import Dict, Any, List, Optional, Sequence
from dataclasses import dataclass, field
from abc import ABC, abstractmethod
from enum import Enum
import logging

import numpy as np

logger = logging.getLogger("fdea.linprog")

PIVOT_TOL = 1e-9
FEAS_TOL = 1e-7


class LinprogError(Exception):
    pass


class LinprogInputError(LinprogError):
    pass


class LinprogIterationError(LinprogError):
    pass


class Sense(Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


class Relation(Enum):
    LE = "<="
    EQ = "="
    GE = ">="


class LPStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass
class Constraint:
    """One row: coeffs . x  (relation)  rhs."""
    coeffs: Sequence[float]
    relation: Relation
    rhs: float
    name: str = ""


@dataclass
class LinearProgram:
    sense: Sense
    objective: Sequence[float]
    constraints: List[Constraint] = field(default_factory=list)
    lower_bounds: Optional[Sequence[float]] = None

    @property
    def num_variables(self) -> int:
        return len(self.objective)

    def bounds(self) -> np.ndarray:
        if self.lower_bounds is None:
            return np.zeros(self.num_variables)
        return np.asarray(self.lower_bounds, dtype=float)

    def matrix(self) -> np.ndarray:
        if not self.constraints:
            return np.zeros((0, self.num_variables))
        return np.asarray([c.coeffs for c in self.constraints], dtype=float)

    def validate(self) -> None:
        """Raise LinprogInputError on dimension mismatch or non-finite data."""
        p = self.num_variables
        if p == 0:
            raise LinprogInputError("LinearProgram has no variables")
        if not isinstance(self.sense, Sense):
            raise LinprogInputError(f"sense must be a Sense, got {self.sense!r}")
        if not np.all(np.isfinite(np.asarray(self.objective, dtype=float))):
            raise LinprogInputError("objective has non-finite coefficients")
        if self.lower_bounds is not None:
            if len(self.lower_bounds) != p:
                raise LinprogInputError(
                    f"lower_bounds has length {len(self.lower_bounds)}, expected {p}"
                )
            if not np.all(np.isfinite(self.bounds())):
                raise LinprogInputError("lower bounds must be finite")
        for idx, con in enumerate(self.constraints):
            label = con.name or f"#{idx}"
            if len(con.coeffs) != p:
                raise LinprogInputError(
                    f"constraint {label} has {len(con.coeffs)} coefficients, expected {p}"
                )
            if not isinstance(con.relation, Relation):
                raise LinprogInputError(f"constraint {label} has invalid relation {con.relation!r}")
            if not (np.all(np.isfinite(np.asarray(con.coeffs, dtype=float)))
                    and np.isfinite(con.rhs)):
                raise LinprogInputError(f"constraint {label} has non-finite data")

    def evaluate(self, x: Sequence[float]) -> float:
        return float(np.dot(np.asarray(self.objective, dtype=float), np.asarray(x, dtype=float)))

    def is_feasible(self, x: Sequence[float], tol: float = FEAS_TOL) -> bool:
        xv = np.asarray(x, dtype=float)
        if np.any(xv < self.bounds() - tol):
            return False
        for con in self.constraints:
            lhs = float(np.dot(np.asarray(con.coeffs, dtype=float), xv))
            if con.relation is Relation.LE and lhs > con.rhs + tol:
                return False
            if con.relation is Relation.GE and lhs < con.rhs - tol:
                return False
            if con.relation is Relation.EQ and abs(lhs - con.rhs) > tol:
                return False
        return True


@dataclass
class LPSolution:
    status: LPStatus
    objective_value: float = float("nan")
    variables: np.ndarray = field(default_factory=lambda: np.zeros(0))
    iterations: int = 0

    @property
    def is_optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class SolverInterface(ABC):
    @abstractmethod
    def __init__(self, config: Dict[str, Any]) -> None: pass

    @abstractmethod
    def solve(self, lp: LinearProgram) -> LPSolution:
        """
        Solve the program.

        Args:
            lp: Program to solve. Validated before solving.

        Returns:
            LPSolution whose status is optimal, infeasible or unbounded.

        Raises:
            LinprogInputError: malformed program.
            LinprogIterationError: pivot budget exhausted.
        """
        pass


class SimplexSolver(SolverInterface):
    """Built-in dense two-phase simplex with Bland's rule."""

    def __init__(self, config: Dict[str, Any] = None) -> None:
        config = config or {}
        self._pivot_tol = float(config.get("pivot_tol", PIVOT_TOL))
        self._feas_tol = float(config.get("feas_tol", FEAS_TOL))
        self._max_iterations = int(config.get("max_iterations", 10000))

    def solve(self, lp: LinearProgram) -> LPSolution:
        from .internal.tableau import two_phase, IterationLimit

        lp.validate()
        lower = lp.bounds()
        c = np.asarray(lp.objective, dtype=float)
        if lp.sense is Sense.MINIMIZE:
            c = -c
        A = lp.matrix()
        # x = lower + x', x' >= 0
        b = np.asarray([con.rhs for con in lp.constraints], dtype=float) - A @ lower
        relations = [con.relation.value for con in lp.constraints]
        for i in np.flatnonzero(b < 0):
            A[i] = -A[i]
            b[i] = -b[i]
            if relations[i] == "<=":
                relations[i] = ">="
            elif relations[i] == ">=":
                relations[i] = "<="
        try:
            result = two_phase(c, A, relations, b, self._pivot_tol, self._feas_tol,
                               self._max_iterations)
        except IterationLimit as exc:
            raise LinprogIterationError(str(exc)) from exc

        status = LPStatus(result.status)
        if status is not LPStatus.OPTIMAL:
            logger.debug("simplex finished %s after %d pivots", status.value, result.iterations)
            return LPSolution(status, iterations=result.iterations)
        x = lower + result.x
        return LPSolution(status, lp.evaluate(x), x, result.iterations)


class HighsSolver(SolverInterface):
    """scipy.optimize.linprog with the HiGHS method."""

    def __init__(self, config: Dict[str, Any] = None) -> None:
        self._config = config or {}

    def solve(self, lp: LinearProgram) -> LPSolution:
        from .internal.highs import solve_highs

        lp.validate()
        return solve_highs(lp)


_SOLVERS = {"simplex": SimplexSolver, "highs": HighsSolver}


def create_interface(config: Dict[str, Any] = None) -> SolverInterface:
    config = config or {}
    name = config.get("solver", "simplex")
    if name not in _SOLVERS:
        raise LinprogError(f"Unknown solver: {name!r}")
    return _SOLVERS[name](config)


_default_solver = SimplexSolver()


def solve(lp: LinearProgram) -> LPSolution:
    """Solve with the built-in simplex."""
    return _default_solver.solve(lp)
