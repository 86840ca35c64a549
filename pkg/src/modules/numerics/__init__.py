"""
fdea Numerics Layer.

Numeric building blocks with no DEA knowledge:
- tfn: Triangular fuzzy numbers, arithmetic, membership and alpha-cuts
- linprog: Dense linear programs and the two-phase simplex solver
"""
