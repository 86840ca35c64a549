"""
Linear programs for the multiplier-form DEA models.

Variables are ordered [u_1..u_m, v_1..v_s]: input weights first, then output
weights, every one bounded below by epsilon. Bound index 0/1/2 selects the
lo/mid/hi component of each TFN.
"""

from typing import List, Sequence

import numpy as np

from ....numerics.linprog import Constraint, LinearProgram, Relation, Sense

LO, MID, HI = 0, 1, 2
BOUNDS = (LO, MID, HI)
BOUND_SYMBOL = {LO: "L", MID: "M", HI: "U"}

# objective bound -> (output bound in the objective, input bound normalized to 1)
PER_BOUND_PAIRS = {LO: (LO, HI), MID: (MID, MID), HI: (HI, LO)}


def constraint_family(X: np.ndarray, Y: np.ndarray, optimistic: bool) -> List[Constraint]:
    """
    One row per DMU j.

    Optimistic: v.y^U_j - u.x^L_j <= 0. Pessimistic: v.y^L_j - u.x^U_j >= 0.
    """
    if optimistic:
        y_bound, x_bound, relation = HI, LO, Relation.LE
    else:
        y_bound, x_bound, relation = LO, HI, Relation.GE
    return [
        Constraint(np.concatenate([-X[j, :, x_bound], Y[j, :, y_bound]]).tolist(),
                   relation, 0.0, name=f"dmu[{j}]")
        for j in range(X.shape[0])
    ]


def normalization(X: np.ndarray, k: int, bound: int, s: int) -> Constraint:
    """u.x^bound_k = 1"""
    coeffs = np.concatenate([X[k, :, bound], np.zeros(s)])
    return Constraint(coeffs.tolist(), Relation.EQ, 1.0,
                      name=f"sum u*x^{BOUND_SYMBOL[bound]}_k = 1")


def output_objective(Y: np.ndarray, k: int, weights: Sequence[float], m: int) -> List[float]:
    """sum_t w_t * v.y^t_k with zero input coefficients."""
    combined = sum(w * Y[k, :, t] for t, w in zip(BOUNDS, weights))
    return np.concatenate([np.zeros(m), combined]).tolist()


def build(X: np.ndarray, Y: np.ndarray, k: int, optimistic: bool,
          norm_bounds: Sequence[int], objective_weights: Sequence[float],
          epsilon: float) -> LinearProgram:
    m, s = X.shape[1], Y.shape[1]
    constraints = constraint_family(X, Y, optimistic)
    constraints += [normalization(X, k, b, s) for b in norm_bounds]
    return LinearProgram(
        Sense.MAXIMIZE if optimistic else Sense.MINIMIZE,
        output_objective(Y, k, objective_weights, m),
        constraints,
        [epsilon] * (m + s),
    )


def unit_weights(bound: int) -> List[float]:
    weights = [0.0, 0.0, 0.0]
    weights[bound] = 1.0
    return weights


def numerator_triple(Y: np.ndarray, k: int, v: np.ndarray) -> np.ndarray:
    """(v.y^L_k, v.y^M_k, v.y^U_k)"""
    return np.array([float(np.dot(v, Y[k, :, t])) for t in BOUNDS])
