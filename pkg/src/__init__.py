"""fdea - Fuzzy multi-objective optimistic/pessimistic DEA."""
