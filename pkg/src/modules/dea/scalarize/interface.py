"""
Module: scalarize
Layer: dea

Turns a DMU's (lo, mid, hi) efficiency triple into one score: draw a seeded
population of weight vectors uniformly from the simplex, scalarize with the
weighted sum, and keep the best value (largest for optimistic, smallest for
pessimistic). Ties go to the earliest weight vector in population order.
"""

from typing import List, Optional, Sequence, Tuple
from dataclasses import dataclass
import logging

import numpy as np

from ..models import (
    BoundEfficiencies,
    DeaModelsInterface,
    DMUDataset,
    Mode,
    Multipliers,
    Orientation,
)

logger = logging.getLogger("fdea.scalarize")

NUM_OBJECTIVES = 3
POPULATION_MULTIPLIER = 100


class ScalarizeError(Exception):
    pass


@dataclass(frozen=True)
class WeightVector:
    w: Tuple[float, ...]

    def __post_init__(self) -> None:
        w = tuple(float(x) for x in self.w)
        if len(w) < 2:
            raise ScalarizeError(f"weight vector needs at least two components, got {w}")
        if min(w) < 0:
            raise ScalarizeError(f"weights must be non-negative, got {w}")
        if abs(sum(w) - 1.0) > 1e-12:
            raise ScalarizeError(f"weights must sum to 1, got {sum(w)!r}")
        object.__setattr__(self, "w", w)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.w)


@dataclass(frozen=True)
class ScalarizedResult:
    dmu_id: str
    orientation: Orientation
    efficiency: float
    best_weights: WeightVector
    bounds: BoundEfficiencies
    objective_triple: Tuple[float, float, float]
    multipliers: Multipliers
    population_size: int
    mode: Mode
    seed: Optional[int] = None


def weight_population(p: int, D: int = NUM_OBJECTIVES, seed: int = 42,
                      multiplier: int = POPULATION_MULTIPLIER) -> List[WeightVector]:
    """
    multiplier * p weight vectors of length D, uniform on the simplex.

    Normalized unit exponentials, i.e. a symmetric Dirichlet(1, ..., 1) draw.
    """
    if p < 1:
        raise ScalarizeError(f"p must be >= 1, got {p}")
    if D < 2:
        raise ScalarizeError(f"D must be >= 2, got {D}")
    if multiplier < 1:
        raise ScalarizeError(f"multiplier must be >= 1, got {multiplier}")
    rng = np.random.default_rng(seed)
    g = rng.exponential(scale=1.0, size=(multiplier * p, D))
    W = g / g.sum(axis=1, keepdims=True)
    return [WeightVector(tuple(row)) for row in W.tolist()]


def scalarize(bounds: BoundEfficiencies, w: WeightVector) -> float:
    if len(w.w) != NUM_OBJECTIVES:
        raise ScalarizeError(f"expected {NUM_OBJECTIVES} weights, got {len(w.w)}")
    return float(np.dot(w.as_array(), bounds.as_array()))


def _best_index(values: np.ndarray, orientation: Orientation) -> int:
    # argmax/argmin return the first occurrence
    if orientation is Orientation.OPTIMISTIC:
        return int(np.argmax(values))
    return int(np.argmin(values))


def _matrix(population: Sequence[WeightVector]) -> np.ndarray:
    if not population:
        raise ScalarizeError("weight population is empty")
    W = np.array([w.w for w in population], dtype=float)
    if W.shape[1] != NUM_OBJECTIVES:
        raise ScalarizeError(f"expected {NUM_OBJECTIVES} weights, got {W.shape[1]}")
    return W


def select_best(bounds: BoundEfficiencies, population: Sequence[WeightVector],
                dmu_id: str = "", seed: Optional[int] = None) -> ScalarizedResult:
    W = _matrix(population)
    values = W @ bounds.as_array()
    idx = _best_index(values, bounds.orientation)
    best = population[idx]
    return ScalarizedResult(
        dmu_id=dmu_id,
        orientation=bounds.orientation,
        efficiency=float(values[idx]),
        best_weights=best,
        bounds=bounds,
        objective_triple=(bounds.lo, bounds.mid, bounds.hi),
        multipliers=bounds.multipliers(int(np.argmax(best.as_array()))),
        population_size=len(population),
        mode=bounds.mode,
        seed=seed,
    )


def evaluate_dmu(models: DeaModelsInterface, dataset: DMUDataset, k: int,
                 orientation: Orientation, mode: Mode,
                 population: Sequence[WeightVector],
                 seed: Optional[int] = None) -> ScalarizedResult:
    """
    Bounds once, then the best weighted value over the population.

    per_bound scalarizes the bound triple directly; literal and modal solve one
    weighted program per weight vector.
    """
    orientation, mode = Orientation(orientation), Mode(mode)
    dmu_id = dataset.dmus[k].id
    bounds = models.bounds(dataset, k, orientation, mode)
    if mode is Mode.PER_BOUND:
        result = select_best(bounds, population, dmu_id, seed)
    else:
        _matrix(population)
        sign = 1.0 if orientation is Orientation.OPTIMISTIC else -1.0
        best_idx, best_sol = -1, None
        for idx, w in enumerate(population):
            sol = models.weighted_solve(dataset, k, orientation, mode, w.w)
            if best_sol is None or sign * (sol.value - best_sol.value) > 0:
                best_idx, best_sol = idx, sol
        result = ScalarizedResult(
            dmu_id=dmu_id,
            orientation=orientation,
            efficiency=best_sol.value,
            best_weights=population[best_idx],
            bounds=bounds,
            objective_triple=best_sol.objective_triple,
            multipliers=best_sol.multipliers,
            population_size=len(population),
            mode=mode,
            seed=seed,
        )
    logger.debug("DMU %s %s efficiency %.6f with weights %s", dmu_id, orientation.value,
                 result.efficiency, result.best_weights.w)
    return result
