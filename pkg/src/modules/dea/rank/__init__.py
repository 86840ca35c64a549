"""
Module: rank
Layer: dea

Classification, geometric-average ranking and Spearman comparison.
"""

from .interface import (
    Classification,
    Comparison,
    OptimisticClass,
    PessimisticClass,
    RankEntry,
    RankRow,
    RankReport,
    RankError,
    RankDomainError,
    SpearmanError,
    DEFAULT_CLASSIFY_TOL,
    RANK_DECIMALS,
    ROUND_OFF,
    OPTIMISTIC_SHORTFALL,
    PESSIMISTIC_EXCESS,
    classify,
    geometric,
    rank_dmus,
    spearman,
    recommend,
    build_report,
)

__all__ = [
    "Classification",
    "Comparison",
    "OptimisticClass",
    "PessimisticClass",
    "RankEntry",
    "RankRow",
    "RankReport",
    "RankError",
    "RankDomainError",
    "SpearmanError",
    "DEFAULT_CLASSIFY_TOL",
    "RANK_DECIMALS",
    "ROUND_OFF",
    "OPTIMISTIC_SHORTFALL",
    "PESSIMISTIC_EXCESS",
    "classify",
    "geometric",
    "rank_dmus",
    "spearman",
    "recommend",
    "build_report",
]
