"""
Module: models
Layer: dea

Crisp optimistic/pessimistic DEA and their fuzzy multi-objective extensions.

For DMU k the optimistic model maximizes the weighted-output numerator under
a Charnes-Cooper normalization of the weighted inputs, subject to every DMU's
ratio staying at most one; the pessimistic model minimizes it subject to every
ratio staying at least one. Fuzzy data turns the single objective into a
(lo, mid, hi) triple, evaluated in one of three modes:

- per_bound: three LPs sharing one constraint family, each normalized on the
  input bound that pairs with its output bound.
- literal: all three normalizations imposed at once. Infeasible as soon as an
  input of DMU k is genuinely fuzzy; kept for fidelity and diagnostics.
- modal: one multiplier set normalized on the modal inputs, with the three
  numerators as objectives.
"""

from typing import Dict, Any, List, Optional, Sequence, Tuple
from dataclasses import dataclass, field
from abc import ABC, abstractmethod
from enum import Enum
import logging

import numpy as np

from ...numerics.tfn import TFN
from ...numerics.linprog import LPStatus, SolverInterface, create_interface as create_solver
from .internal.programs import (
    BOUND_SYMBOL, BOUNDS, MID, PER_BOUND_PAIRS, build, numerator_triple, unit_weights,
)

logger = logging.getLogger("fdea.models")

DEFAULT_EPSILON = 1e-5
CAP_TOL = 1e-7
ORDER_TOL = 1e-6


class ModelsError(Exception):
    pass


class DatasetError(ModelsError):
    """Invalid dataset; row is 1-based over DMUs, column names the offending field."""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None):
        location = []
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column {column}")
        super().__init__(f"{message} ({', '.join(location)})" if location else message)
        self.row = row
        self.column = column


class ModelInfeasibleError(ModelsError):
    def __init__(self, report: "InfeasibilityReport"):
        super().__init__(report.message)
        self.report = report


class ModelUnboundedError(ModelsError):
    pass


class ModelInvariantError(ModelsError):
    pass


class Orientation(Enum):
    OPTIMISTIC = "optimistic"
    PESSIMISTIC = "pessimistic"


class Mode(Enum):
    PER_BOUND = "per_bound"
    LITERAL = "literal"
    MODAL = "modal"


@dataclass(frozen=True)
class DMURecord:
    id: str
    label: str
    inputs: Tuple[TFN, ...]
    outputs: Tuple[TFN, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "id", str(self.id))
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))


@dataclass
class DMUDataset:
    dmus: List[DMURecord]
    input_names: List[str]
    output_names: List[str]
    _arrays: Optional[Tuple[Tuple[DMURecord, ...], np.ndarray, np.ndarray]] = field(
        default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.dmus = list(self.dmus)
        self.input_names = list(self.input_names)
        self.output_names = list(self.output_names)
        _validate_dataset(self)

    @property
    def n(self) -> int:
        return len(self.dmus)

    @property
    def m(self) -> int:
        return len(self.input_names)

    @property
    def s(self) -> int:
        return len(self.output_names)

    @property
    def ids(self) -> List[str]:
        return [d.id for d in self.dmus]

    @property
    def is_crisp(self) -> bool:
        return all(t.is_crisp for d in self.dmus for t in d.inputs + d.outputs)

    def index_of(self, dmu_id: str) -> int:
        for idx, dmu in enumerate(self.dmus):
            if dmu.id == dmu_id:
                return idx
        raise DatasetError(f"Unknown DMU id {dmu_id!r}")

    def with_scaled_input(self, i: int, factor: float) -> "DMUDataset":
        """Copy with input column i multiplied by a positive factor."""
        if not 0 <= i < self.m:
            raise DatasetError(f"Input index {i} out of range for {self.m} inputs")
        scaled = []
        for dmu in self.dmus:
            inputs = list(dmu.inputs)
            inputs[i] = inputs[i].scale(factor)
            scaled.append(DMURecord(dmu.id, dmu.label, tuple(inputs), dmu.outputs))
        return DMUDataset(scaled, self.input_names, self.output_names)

    def arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """
        X with shape (n, m, 3) and Y with shape (n, s, 3).

        Built once and reused until the DMU list changes; both arrays are
        read-only.
        """
        key = tuple(self.dmus)
        cached = self._arrays
        if (cached is None or len(cached[0]) != len(key)
                or any(a is not b for a, b in zip(cached[0], key))):
            X = np.array([[t.as_tuple() for t in d.inputs] for d in key], dtype=float)
            Y = np.array([[t.as_tuple() for t in d.outputs] for d in key], dtype=float)
            X.setflags(write=False)
            Y.setflags(write=False)
            cached = self._arrays = (key, X, Y)
        return cached[1], cached[2]


def _validate_dataset(ds: DMUDataset) -> None:
    if not ds.dmus:
        raise DatasetError("Dataset has no DMUs")
    if not ds.input_names:
        raise DatasetError("Dataset needs at least one input")
    if not ds.output_names:
        raise DatasetError("Dataset needs at least one output")
    for names, kind in ((ds.input_names, "input"), (ds.output_names, "output")):
        if len(set(names)) != len(names):
            raise DatasetError(f"Duplicate {kind} names: {names}")
    seen = set()
    for row, dmu in enumerate(ds.dmus, start=1):
        if not str(dmu.id).strip():
            raise DatasetError("Empty DMU id", row=row, column="id")
        if dmu.id in seen:
            raise DatasetError(f"Duplicate DMU id {dmu.id!r}", row=row, column="id")
        seen.add(dmu.id)
        if len(dmu.inputs) != ds.m:
            raise DatasetError(
                f"DMU {dmu.id!r} has {len(dmu.inputs)} inputs, expected {ds.m}", row=row
            )
        if len(dmu.outputs) != ds.s:
            raise DatasetError(
                f"DMU {dmu.id!r} has {len(dmu.outputs)} outputs, expected {ds.s}", row=row
            )
        cells = [(f"in:{n}", t) for n, t in zip(ds.input_names, dmu.inputs)]
        cells += [(f"out:{n}", t) for n, t in zip(ds.output_names, dmu.outputs)]
        for column, value in cells:
            if not isinstance(value, TFN):
                raise DatasetError(f"Expected a TFN, got {value!r}", row=row, column=column)
            if not value.is_positive:
                raise DatasetError(f"Value {value} must be strictly positive",
                                   row=row, column=column)


@dataclass(frozen=True)
class Multipliers:
    u: Tuple[float, ...]
    v: Tuple[float, ...]

    @classmethod
    def from_vector(cls, z: Sequence[float], m: int) -> "Multipliers":
        return cls(tuple(float(x) for x in z[:m]), tuple(float(x) for x in z[m:]))

    def as_dict(self, input_names: Sequence[str], output_names: Sequence[str]) -> Dict[str, Any]:
        return {
            "u": dict(zip(input_names, self.u)),
            "v": dict(zip(output_names, self.v)),
        }


@dataclass(frozen=True)
class BoundEfficiencies:
    lo: float
    mid: float
    hi: float
    multipliers_lo: Multipliers
    multipliers_mid: Multipliers
    multipliers_hi: Multipliers
    orientation: Orientation
    mode: Mode = Mode.PER_BOUND

    def as_array(self) -> np.ndarray:
        return np.array([self.lo, self.mid, self.hi])

    def multipliers(self, bound: int) -> Multipliers:
        return (self.multipliers_lo, self.multipliers_mid, self.multipliers_hi)[bound]


@dataclass(frozen=True)
class InfeasibilityReport:
    dmu_id: str
    orientation: Orientation
    mode: Mode
    conflicts: Tuple[str, ...] = ()
    fuzzy_inputs: Tuple[str, ...] = ()

    @property
    def message(self) -> str:
        text = (f"DMU {self.dmu_id}: {self.orientation.value} model infeasible"
                f" in {self.mode.value} mode")
        if self.conflicts:
            text += "; conflicting normalizations " + ", ".join(self.conflicts)
        if self.fuzzy_inputs:
            text += "; fuzzy inputs " + ", ".join(self.fuzzy_inputs)
        if not self.conflicts:
            text += "; epsilon may be too large for the data scale"
        return text

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dmu": self.dmu_id,
            "orientation": self.orientation.value,
            "mode": self.mode.value,
            "conflicts": list(self.conflicts),
            "fuzzy_inputs": list(self.fuzzy_inputs),
            "message": self.message,
        }


@dataclass(frozen=True)
class WeightedSolution:
    """Optimum of the weighted-sum program for one weight vector."""
    value: float
    objective_triple: Tuple[float, float, float]
    multipliers: Multipliers


class DeaModelsInterface(ABC):
    @abstractmethod
    def __init__(self, config: Dict[str, Any]) -> None: pass

    @property
    @abstractmethod
    def epsilon(self) -> float:
        """Default multiplier floor."""
        pass

    @abstractmethod
    def crisp_optimistic(self, dataset: DMUDataset, k: int,
                         epsilon: Optional[float] = None) -> Tuple[float, Multipliers]:
        """
        Classic optimistic ratio model on crisp data.

        Returns:
            (efficiency in (0, 1], optimal multipliers)

        Raises:
            ModelsError: dataset is not crisp.
            ModelInfeasibleError: epsilon too large for the data.
        """
        pass

    @abstractmethod
    def crisp_pessimistic(self, dataset: DMUDataset, k: int,
                          epsilon: Optional[float] = None) -> Tuple[float, Multipliers]:
        """Classic pessimistic ratio model on crisp data; efficiency >= 1."""
        pass

    @abstractmethod
    def fmoo_bounds(self, dataset: DMUDataset, k: int, epsilon: Optional[float] = None,
                    mode: Mode = Mode.PER_BOUND) -> BoundEfficiencies:
        """
        Optimistic (lo, mid, hi) bound efficiencies of DMU k.

        Raises:
            ModelInfeasibleError: carries an InfeasibilityReport.
            ModelInvariantError: ordering or cap violated beyond tolerance.
        """
        pass

    @abstractmethod
    def fmop_bounds(self, dataset: DMUDataset, k: int, epsilon: Optional[float] = None,
                    mode: Mode = Mode.PER_BOUND) -> BoundEfficiencies:
        """Pessimistic mirror of fmoo_bounds."""
        pass

    @abstractmethod
    def bounds(self, dataset: DMUDataset, k: int, orientation: Orientation,
               mode: Mode = Mode.PER_BOUND, epsilon: Optional[float] = None) -> BoundEfficiencies:
        """fmoo_bounds or fmop_bounds by orientation."""
        pass

    @abstractmethod
    def weighted_solve(self, dataset: DMUDataset, k: int, orientation: Orientation,
                       mode: Mode, weights: Sequence[float],
                       epsilon: Optional[float] = None,
                       bounds: Optional[BoundEfficiencies] = None) -> WeightedSolution:
        """
        Optimum of w1*lo + w2*mid + w3*hi for one weight vector.

        per_bound combines the bound triple (computed unless given);
        literal and modal solve one LP.
        """
        pass


class DefaultDeaModels(DeaModelsInterface):
    def __init__(self, config: Dict[str, Any] = None,
                 solver: Optional[SolverInterface] = None) -> None:
        config = config or {}
        self._epsilon = float(config.get("epsilon", DEFAULT_EPSILON))
        if not self._epsilon > 0:
            raise ModelsError(f"epsilon must be > 0, got {self._epsilon!r}")
        self._solver = solver or create_solver({"solver": config.get("solver", "simplex")})

    @property
    def epsilon(self) -> float:
        return self._epsilon

    def _eps(self, epsilon: Optional[float]) -> float:
        eps = self._epsilon if epsilon is None else float(epsilon)
        if not eps > 0:
            raise ModelsError(f"epsilon must be > 0, got {eps!r}")
        return eps

    def _solve(self, lp, dataset: DMUDataset, k: int, orientation: Orientation,
               mode: Mode, norm_bounds: Sequence[int]):
        sol = self._solver.solve(lp)
        if sol.status is LPStatus.UNBOUNDED:
            raise ModelUnboundedError(
                f"DMU {dataset.dmus[k].id}: {orientation.value} program unbounded"
            )
        if sol.status is LPStatus.INFEASIBLE:
            dmu = dataset.dmus[k]
            conflicts = []
            for a, b in ((0, 1), (1, 2), (0, 2)):
                if a in norm_bounds and b in norm_bounds and any(
                    t.as_tuple()[a] != t.as_tuple()[b] for t in dmu.inputs
                ):
                    conflicts.append(
                        f"sum u*x^{BOUND_SYMBOL[a]}_k = 1 vs sum u*x^{BOUND_SYMBOL[b]}_k = 1"
                    )
            fuzzy = tuple(
                name for name, t in zip(dataset.input_names, dmu.inputs) if t.lo < t.hi
            ) if conflicts else ()
            report = InfeasibilityReport(dmu.id, orientation, mode, tuple(conflicts), fuzzy)
            logger.info(report.message)
            raise ModelInfeasibleError(report)
        return sol

    def _crisp(self, dataset: DMUDataset, k: int, epsilon: Optional[float],
               orientation: Orientation) -> Tuple[float, Multipliers]:
        if not dataset.is_crisp:
            raise ModelsError("Crisp models need a dataset whose TFNs are all degenerate")
        X, Y = dataset.arrays()
        optimistic = orientation is Orientation.OPTIMISTIC
        lp = build(X, Y, k, optimistic, [MID], unit_weights(MID), self._eps(epsilon))
        sol = self._solve(lp, dataset, k, orientation, Mode.PER_BOUND, [MID])
        return sol.objective_value, Multipliers.from_vector(sol.variables, dataset.m)

    def crisp_optimistic(self, dataset: DMUDataset, k: int,
                         epsilon: Optional[float] = None) -> Tuple[float, Multipliers]:
        return self._crisp(dataset, k, epsilon, Orientation.OPTIMISTIC)

    def crisp_pessimistic(self, dataset: DMUDataset, k: int,
                          epsilon: Optional[float] = None) -> Tuple[float, Multipliers]:
        return self._crisp(dataset, k, epsilon, Orientation.PESSIMISTIC)

    def _norm_bounds(self, mode: Mode, bound: int) -> List[int]:
        if mode is Mode.PER_BOUND:
            return [PER_BOUND_PAIRS[bound][1]]
        if mode is Mode.LITERAL:
            return list(BOUNDS)
        return [MID]

    def _bounds(self, dataset: DMUDataset, k: int, epsilon: Optional[float],
                mode: Mode, orientation: Orientation) -> BoundEfficiencies:
        if not 0 <= k < dataset.n:
            raise ModelsError(f"DMU index {k} out of range for {dataset.n} DMUs")
        mode = Mode(mode)
        eps = self._eps(epsilon)
        X, Y = dataset.arrays()
        optimistic = orientation is Orientation.OPTIMISTIC
        values, multipliers = [], []
        for bound in BOUNDS:
            out_bound = PER_BOUND_PAIRS[bound][0]
            norms = self._norm_bounds(mode, bound)
            lp = build(X, Y, k, optimistic, norms, unit_weights(out_bound), eps)
            sol = self._solve(lp, dataset, k, orientation, mode, norms)
            values.append(sol.objective_value)
            multipliers.append(Multipliers.from_vector(sol.variables, dataset.m))
        result = BoundEfficiencies(values[0], values[1], values[2],
                                   multipliers[0], multipliers[1], multipliers[2],
                                   orientation, mode)
        _check_bounds(result, dataset.dmus[k].id)
        logger.debug("DMU %s %s %s bounds (%.6f, %.6f, %.6f)", dataset.dmus[k].id,
                     orientation.value, mode.value, result.lo, result.mid, result.hi)
        return result

    def fmoo_bounds(self, dataset: DMUDataset, k: int, epsilon: Optional[float] = None,
                    mode: Mode = Mode.PER_BOUND) -> BoundEfficiencies:
        return self._bounds(dataset, k, epsilon, mode, Orientation.OPTIMISTIC)

    def fmop_bounds(self, dataset: DMUDataset, k: int, epsilon: Optional[float] = None,
                    mode: Mode = Mode.PER_BOUND) -> BoundEfficiencies:
        return self._bounds(dataset, k, epsilon, mode, Orientation.PESSIMISTIC)

    def bounds(self, dataset: DMUDataset, k: int, orientation: Orientation,
               mode: Mode = Mode.PER_BOUND, epsilon: Optional[float] = None) -> BoundEfficiencies:
        """fmoo_bounds or fmop_bounds by orientation."""
        return self._bounds(dataset, k, epsilon, mode, Orientation(orientation))

    def weighted_solve(self, dataset: DMUDataset, k: int, orientation: Orientation,
                       mode: Mode, weights: Sequence[float],
                       epsilon: Optional[float] = None,
                       bounds: Optional[BoundEfficiencies] = None) -> WeightedSolution:
        w = np.asarray(weights, dtype=float)
        if w.shape != (3,) or np.any(w < 0):
            raise ModelsError(f"weights must be three non-negative numbers, got {weights!r}")
        orientation, mode = Orientation(orientation), Mode(mode)
        if mode is Mode.PER_BOUND:
            if bounds is None:
                bounds = self._bounds(dataset, k, epsilon, mode, orientation)
            triple = bounds.as_array()
            return WeightedSolution(float(np.dot(w, triple)), tuple(triple.tolist()),
                                    bounds.multipliers(int(np.argmax(w))))
        X, Y = dataset.arrays()
        norms = list(BOUNDS) if mode is Mode.LITERAL else [MID]
        lp = build(X, Y, k, orientation is Orientation.OPTIMISTIC, norms, w, self._eps(epsilon))
        sol = self._solve(lp, dataset, k, orientation, mode, norms)
        mult = Multipliers.from_vector(sol.variables, dataset.m)
        triple = numerator_triple(Y, k, np.asarray(mult.v))
        return WeightedSolution(float(np.dot(w, triple)), tuple(triple.tolist()), mult)


def fuzzy_ratio(dmu: DMURecord, multipliers: Multipliers) -> TFN:
    """Weighted outputs over weighted inputs as a TFN, for positive multipliers."""
    numerator = TFN.crisp(0.0)
    for weight, value in zip(multipliers.v, dmu.outputs):
        numerator = numerator + value.scale(weight)
    denominator = TFN.crisp(0.0)
    for weight, value in zip(multipliers.u, dmu.inputs):
        denominator = denominator + value.scale(weight)
    return numerator / denominator


def _check_bounds(b: BoundEfficiencies, dmu_id: str) -> None:
    scale = max(1.0, abs(b.hi))
    if b.lo > b.mid + ORDER_TOL * scale or b.mid > b.hi + ORDER_TOL * scale:
        raise ModelInvariantError(
            f"DMU {dmu_id}: bound ordering violated ({b.lo}, {b.mid}, {b.hi})"
        )
    if b.orientation is Orientation.OPTIMISTIC and b.hi > 1.0 + CAP_TOL:
        raise ModelInvariantError(f"DMU {dmu_id}: optimistic bound {b.hi} exceeds 1")
    if b.orientation is Orientation.PESSIMISTIC and b.lo < 1.0 - CAP_TOL:
        raise ModelInvariantError(f"DMU {dmu_id}: pessimistic bound {b.lo} below 1")


def create_interface(config: Dict[str, Any] = None,
                     solver: Optional[SolverInterface] = None) -> DeaModelsInterface:
    return DefaultDeaModels(config or {}, solver)
