"""
Module: tfn
Layer: numerics

Triangular fuzzy numbers, arithmetic, membership and alpha-cuts.
"""

from .interface import (
    TFN,
    Interval,
    TfnError,
    TfnDomainError,
    TfnOrderError,
    add,
    sub,
    mul,
    div,
    membership,
    alpha_cut,
    from_observations,
)

__all__ = [
    "TFN",
    "Interval",
    "TfnError",
    "TfnDomainError",
    "TfnOrderError",
    "add",
    "sub",
    "mul",
    "div",
    "membership",
    "alpha_cut",
    "from_observations",
]
