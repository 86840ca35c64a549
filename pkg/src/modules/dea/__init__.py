"""
fdea DEA Layer.

Efficiency evaluation on fuzzy input/output data:
- models: Crisp and fuzzy optimistic/pessimistic DEA programs
- scalarize: Random weight populations and weighted-sum selection
- rank: Classification, geometric-average ranking, Spearman comparison
"""
