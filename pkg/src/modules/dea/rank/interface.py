"""
Module: rank
Layer: dea

Classification, geometric-average combination and ranking of DMUs from their
optimistic (<= 1) and pessimistic (>= 1) efficiencies, plus tie-corrected
Spearman comparison against an external ranking.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple
import logging
import math

import numpy as np
from scipy.stats import rankdata

logger = logging.getLogger("fdea.rank")

DEFAULT_CLASSIFY_TOL = 1e-6
# LP optima carry round-off of this order; classify never resolves finer, and
# rank_dmus rounds scores to RANK_DECIMALS before comparing them.
ROUND_OFF = 1e-9
RANK_DECIMALS = 9

OPTIMISTIC_SHORTFALL = "optimistic shortfall"
PESSIMISTIC_EXCESS = "pessimistic excess"


class RankError(Exception):
    pass


class RankDomainError(RankError):
    pass


class SpearmanError(RankError):
    pass


class OptimisticClass(Enum):
    EFFICIENT = "optimistic-efficient"
    NON_EFFICIENT = "optimistic-non-efficient"


class PessimisticClass(Enum):
    INEFFICIENT = "pessimistic-inefficient"
    NON_INEFFICIENT = "pessimistic-non-inefficient"


@dataclass(frozen=True)
class Classification:
    optimistic: OptimisticClass
    pessimistic: PessimisticClass

    def __str__(self) -> str:
        return f"{self.optimistic.value}, {self.pessimistic.value}"


@dataclass(frozen=True)
class RankEntry:
    id: str
    score: float
    rank: int
    tied: bool


@dataclass(frozen=True)
class RankRow:
    id: str
    label: str
    optimistic: float
    pessimistic: float
    geometric: float
    classification: Classification
    rank: int
    tied: bool
    recommendation: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "label": self.label,
            "optimistic": self.optimistic,
            "pessimistic": self.pessimistic,
            "geometric": self.geometric,
            "optimistic_class": self.classification.optimistic.value,
            "pessimistic_class": self.classification.pessimistic.value,
            "rank": self.rank,
            "tied": self.tied,
            "recommendation": self.recommendation,
        }


@dataclass(frozen=True)
class Comparison:
    label: str
    rho: float
    external_ranks: Tuple[float, ...]
    reference_rho: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "rho": self.rho,
            "external_ranks": list(self.external_ranks),
            "reference_rho": self.reference_rho,
        }


@dataclass(frozen=True)
class RankReport:
    """Rows in input order, run metadata and an optional external comparison."""

    rows: Tuple[RankRow, ...]
    metadata: Dict[str, Any] = field(default_factory=dict)
    comparison: Optional[Comparison] = None

    @property
    def ids(self) -> List[str]:
        return [row.id for row in self.rows]

    @property
    def ranks(self) -> List[int]:
        return [row.rank for row in self.rows]

    @property
    def has_ties(self) -> bool:
        return any(row.tied for row in self.rows)

    def row(self, dmu_id: str) -> RankRow:
        for row in self.rows:
            if row.id == dmu_id:
                return row
        raise RankError(f"No DMU with id {dmu_id!r} in report")

    def compare(self, external: Mapping[str, float], label: str = "external",
                reference_rho: Optional[float] = None) -> "RankReport":
        """
        Attach Spearman rho between our ranks and ``external`` (id -> rank).

        The id sets must match exactly.
        """
        ours = set(self.ids)
        theirs = set(external)
        if ours != theirs:
            missing = sorted(ours - theirs)
            extra = sorted(theirs - ours)
            raise RankError(
                f"External ranking ids do not match: missing {missing}, unexpected {extra}"
            )
        external_ranks = tuple(float(external[i]) for i in self.ids)
        rho = spearman(self.ranks, external_ranks)
        logger.info("Spearman rho against %s: %.6f", label, rho)
        return replace(self, comparison=Comparison(label, rho, external_ranks, reference_rho))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "metadata": dict(self.metadata),
            "rows": [row.to_dict() for row in self.rows],
            "comparison": self.comparison.to_dict() if self.comparison else None,
        }


def classify(optimistic: float, pessimistic: float,
             tol: float = DEFAULT_CLASSIFY_TOL) -> Classification:
    tol = max(tol, ROUND_OFF)
    if not (math.isfinite(optimistic) and math.isfinite(pessimistic)):
        raise RankDomainError(f"efficiencies must be finite, got {optimistic}, {pessimistic}")
    if not 0 < optimistic <= 1 + tol:
        raise RankDomainError(f"optimistic efficiency must lie in (0, 1], got {optimistic}")
    if pessimistic < 1 - tol:
        raise RankDomainError(f"pessimistic efficiency must be >= 1, got {pessimistic}")
    opt = (OptimisticClass.EFFICIENT if abs(optimistic - 1) <= tol
           else OptimisticClass.NON_EFFICIENT)
    pes = (PessimisticClass.INEFFICIENT if abs(pessimistic - 1) <= tol
           else PessimisticClass.NON_INEFFICIENT)
    return Classification(opt, pes)


def geometric(optimistic: float, pessimistic: float) -> float:
    if not (optimistic > 0 and pessimistic > 0):
        raise RankDomainError(
            f"geometric average needs positive efficiencies, got {optimistic}, {pessimistic}"
        )
    return math.sqrt(optimistic * pessimistic)


def rank_dmus(scores: Sequence[Tuple[str, float]]) -> List[RankEntry]:
    """
    Competition ranking, highest score first ("1, 1, 3").

    Entries come back in input order; scores equal to RANK_DECIMALS places
    share the smaller rank and are flagged as tied.
    """
    if not scores:
        raise RankError("nothing to rank")
    values = np.array([s for _, s in scores], dtype=float)
    ranks = rankdata(-np.round(values, RANK_DECIMALS), method="min").astype(int)
    counts = {r: int(np.sum(ranks == r)) for r in set(ranks.tolist())}
    return [
        RankEntry(str(dmu_id), float(score), int(r), counts[int(r)] > 1)
        for (dmu_id, score), r in zip(scores, ranks.tolist())
    ]


def spearman(ranks_a: Sequence[float], ranks_b: Sequence[float]) -> float:
    """Pearson correlation of average ranks (tie-corrected Spearman rho)."""
    a = np.asarray(ranks_a, dtype=float)
    b = np.asarray(ranks_b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise SpearmanError(f"rank lists differ in length: {a.size} vs {b.size}")
    if a.size == 0:
        raise SpearmanError("rank lists are empty")
    ra = rankdata(a) - (a.size + 1) / 2.0
    rb = rankdata(b) - (b.size + 1) / 2.0
    denom = math.sqrt(float(ra @ ra) * float(rb @ rb))
    if denom == 0.0:
        raise SpearmanError("Spearman rho is undefined for a constant ranking")
    return max(-1.0, min(1.0, float(ra @ rb) / denom))


def recommend(row: RankRow) -> str:
    """Which orientation dominates the combined score."""
    if abs(math.log(row.optimistic)) > math.log(row.pessimistic):
        return OPTIMISTIC_SHORTFALL
    return PESSIMISTIC_EXCESS


def build_report(optimistic: Mapping[str, float], pessimistic: Mapping[str, float],
                 labels: Optional[Mapping[str, str]] = None,
                 metadata: Optional[Dict[str, Any]] = None,
                 tol: float = DEFAULT_CLASSIFY_TOL) -> RankReport:
    """
    Classify, combine and rank every DMU.

    Row order follows ``optimistic``; every id needs both efficiencies.
    """
    labels = labels or {}
    missing = [i for i in optimistic if i not in pessimistic]
    missing += [i for i in pessimistic if i not in optimistic]
    if missing:
        raise RankError(f"both orientations are required; missing for {sorted(set(missing))}")
    ids = list(optimistic)
    combined = [(i, geometric(optimistic[i], pessimistic[i])) for i in ids]
    rows = []
    for entry in rank_dmus(combined):
        o, p = float(optimistic[entry.id]), float(pessimistic[entry.id])
        row = RankRow(
            id=entry.id,
            label=str(labels.get(entry.id, entry.id)),
            optimistic=o,
            pessimistic=p,
            geometric=entry.score,
            classification=classify(o, p, tol),
            rank=entry.rank,
            tied=entry.tied,
            recommendation="",
        )
        rows.append(replace(row, recommendation=recommend(row)))
    report = RankReport(tuple(rows), dict(metadata or {}))
    if report.has_ties:
        logger.info("Ranking contains ties: %s",
                    [r.id for r in report.rows if r.tied])
    return report
