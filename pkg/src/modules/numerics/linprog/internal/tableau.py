"""
Dense two-phase simplex on a numpy tableau.

Works on the standard form  max c.x  s.t.  A x (<=|=|>=) b,  x >= 0,  b >= 0.
Callers shift variable lower bounds and flip negative right-hand sides first.
Pivoting follows Bland's rule (lowest eligible column enters, lowest basic
index leaves on ratio ties), so identical input always takes the same path.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

LE, EQ, GE = "<=", "=", ">="


class IterationLimit(Exception):
    pass


@dataclass
class TableauResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: np.ndarray
    iterations: int


def _pivot(T: np.ndarray, row: int, col: int) -> None:
    T[row, :] /= T[row, col]
    factors = T[:, col].copy()
    factors[row] = 0.0
    T -= np.outer(factors, T[row, :])
    T[:, col] = 0.0
    T[row, col] = 1.0


def _entering(z_row: np.ndarray, ncols: int, opt_tol: float) -> int:
    candidates = np.flatnonzero(z_row[:ncols] < -opt_tol)
    return int(candidates[0]) if candidates.size else -1


def _leaving(T: np.ndarray, col: int, basis: List[int], pivot_tol: float) -> int:
    column = T[:-1, col]
    eligible = column > pivot_tol
    if not eligible.any():
        return -1
    ratios = np.full(column.shape, np.inf)
    ratios[eligible] = np.maximum(T[:-1, -1][eligible], 0.0) / column[eligible]
    tied = np.flatnonzero(ratios == ratios.min())
    return int(min(tied, key=lambda i: basis[i]))


def _run(T: np.ndarray, basis: List[int], ncols: int, opt_tol: float,
         pivot_tol: float, budget: int) -> Tuple[str, int]:
    for it in range(budget):
        col = _entering(T[-1, :], ncols, opt_tol)
        if col < 0:
            return "optimal", it
        row = _leaving(T, col, basis, pivot_tol)
        if row < 0:
            return "unbounded", it
        _pivot(T, row, col)
        basis[row] = col
    raise IterationLimit(f"simplex did not converge within {budget} pivots")


def _initial_tableau(A: np.ndarray, relations: Sequence[str],
                     b: np.ndarray) -> Tuple[np.ndarray, List[int], int]:
    m, n = A.shape
    n_slack = sum(1 for r in relations if r != EQ)
    n_art = sum(1 for r in relations if r != LE)
    art_start = n + n_slack
    T = np.zeros((m + 1, art_start + n_art + 1))
    basis: List[int] = []
    s = a = 0
    for i, rel in enumerate(relations):
        T[i, :n] = A[i]
        T[i, -1] = b[i]
        if rel == LE:
            T[i, n + s] = 1.0
            basis.append(n + s)
            s += 1
            continue
        if rel == GE:
            T[i, n + s] = -1.0
            s += 1
        T[i, art_start + a] = 1.0
        basis.append(art_start + a)
        a += 1
    return T, basis, art_start


def _drop_artificials(T: np.ndarray, basis: List[int], art_start: int,
                      pivot_tol: float) -> Tuple[np.ndarray, List[int]]:
    """Pivot zero-level artificials out of the basis, then remove their columns."""
    keep: List[int] = []
    for i in range(len(basis)):
        if basis[i] >= art_start:
            nz = np.flatnonzero(np.abs(T[i, :art_start]) > pivot_tol)
            if nz.size == 0:
                continue  # redundant row
            _pivot(T, i, int(nz[0]))
            basis[i] = int(nz[0])
        keep.append(i)
    rows = keep + [T.shape[0] - 1]
    cols = list(range(art_start)) + [T.shape[1] - 1]
    return T[np.ix_(rows, cols)], [basis[i] for i in keep]


def two_phase(c: np.ndarray, A: np.ndarray, relations: Sequence[str], b: np.ndarray,
              pivot_tol: float = 1e-9, feas_tol: float = 1e-7,
              max_iterations: int = 10000) -> TableauResult:
    """Maximize c.x over {A x rel b, x >= 0} with b >= 0 componentwise."""
    n = A.shape[1]
    T, basis, art_start = _initial_tableau(A, relations, b)
    width = T.shape[1] - 1
    iterations = 0

    if width > art_start:
        # phase 1: maximize -sum(artificials)
        T[-1, art_start:width] = 1.0
        for i, col in enumerate(basis):
            if col >= art_start:
                T[-1, :] -= T[i, :]
        status, used = _run(T, basis, width, pivot_tol, pivot_tol, max_iterations)
        iterations += used
        if status != "optimal" or -T[-1, -1] > feas_tol:
            return TableauResult("infeasible", np.zeros(n), iterations)
        T, basis = _drop_artificials(T, basis, art_start, pivot_tol)

    # phase 2
    T[-1, :] = 0.0
    T[-1, :n] = -c
    for i, col in enumerate(basis):
        if col < n and c[col] != 0.0:
            T[-1, :] += c[col] * T[i, :]
    status, used = _run(T, basis, art_start, pivot_tol, pivot_tol, max_iterations - iterations)
    iterations += used

    x = np.zeros(n)
    if status == "optimal":
        for i, col in enumerate(basis):
            if col < n:
                x[col] = max(T[i, -1], 0.0)
    return TableauResult(status, x, iterations)
