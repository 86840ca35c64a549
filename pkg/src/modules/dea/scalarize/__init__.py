"""
Module: scalarize
Layer: dea

Random weight populations and weighted-sum selection.
"""

from .interface import (
    WeightVector,
    ScalarizedResult,
    ScalarizeError,
    weight_population,
    scalarize,
    select_best,
    evaluate_dmu,
    POPULATION_MULTIPLIER,
)

__all__ = [
    "WeightVector",
    "ScalarizedResult",
    "ScalarizeError",
    "weight_population",
    "scalarize",
    "select_best",
    "evaluate_dmu",
    "POPULATION_MULTIPLIER",
]
