"""
fdea Modules.

Layered architecture, each layer importing only from the ones above it:
- infrastructure: Base services (config, logging)
- numerics: Triangular fuzzy numbers and the linear-programming solver
- dea: Efficiency models, weighted-sum scalarization, ranking
- frontend: Command-line interface
"""
