"""
Module: models
Layer: dea

Crisp and fuzzy optimistic/pessimistic DEA programs.
"""

from .interface import (
    create_interface,
    DeaModelsInterface,
    DefaultDeaModels,
    Orientation,
    Mode,
    DMURecord,
    DMUDataset,
    Multipliers,
    BoundEfficiencies,
    InfeasibilityReport,
    WeightedSolution,
    fuzzy_ratio,
    ModelsError,
    DatasetError,
    ModelInfeasibleError,
    ModelUnboundedError,
    ModelInvariantError,
    DEFAULT_EPSILON,
)

__all__ = [
    "create_interface",
    "DeaModelsInterface",
    "DefaultDeaModels",
    "Orientation",
    "Mode",
    "DMURecord",
    "DMUDataset",
    "Multipliers",
    "BoundEfficiencies",
    "InfeasibilityReport",
    "WeightedSolution",
    "fuzzy_ratio",
    "ModelsError",
    "DatasetError",
    "ModelInfeasibleError",
    "ModelUnboundedError",
    "ModelInvariantError",
    "DEFAULT_EPSILON",
]
