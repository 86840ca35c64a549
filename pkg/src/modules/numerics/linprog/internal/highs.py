"""Adapter from LinearProgram to scipy.optimize.linprog (HiGHS)."""

import numpy as np
from scipy.optimize import linprog as scipy_linprog

from ..interface import LinearProgram, LPSolution, LPStatus, Relation, Sense, LinprogError


def solve_highs(lp: LinearProgram) -> LPSolution:
    c = np.asarray(lp.objective, dtype=float)
    if lp.sense is Sense.MAXIMIZE:
        c = -c
    ub_rows, ub_rhs, eq_rows, eq_rhs = [], [], [], []
    for con in lp.constraints:
        row = np.asarray(con.coeffs, dtype=float)
        if con.relation is Relation.LE:
            ub_rows.append(row)
            ub_rhs.append(con.rhs)
        elif con.relation is Relation.GE:
            ub_rows.append(-row)
            ub_rhs.append(-con.rhs)
        else:
            eq_rows.append(row)
            eq_rhs.append(con.rhs)
    res = scipy_linprog(
        c,
        A_ub=np.asarray(ub_rows) if ub_rows else None,
        b_ub=np.asarray(ub_rhs) if ub_rhs else None,
        A_eq=np.asarray(eq_rows) if eq_rows else None,
        b_eq=np.asarray(eq_rhs) if eq_rhs else None,
        bounds=[(lo, None) for lo in lp.bounds()],
        method="highs",
    )
    iterations = int(getattr(res, "nit", 0) or 0)
    if res.status == 0:
        x = np.asarray(res.x, dtype=float)
        return LPSolution(LPStatus.OPTIMAL, lp.evaluate(x), x, iterations)
    if res.status == 2:
        return LPSolution(LPStatus.INFEASIBLE, iterations=iterations)
    if res.status == 3:
        return LPSolution(LPStatus.UNBOUNDED, iterations=iterations)
    raise LinprogError(f"HiGHS failed: {res.message}")
