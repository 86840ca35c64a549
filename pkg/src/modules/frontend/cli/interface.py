"""
Module: cli
Layer: frontend

Dataset ingestion, evaluation, ranking and report rendering behind the fdea
command. The click commands live in ``commands``; everything they do is
available here as plain functions.
"""

from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union
import logging
import os

import pandas as pd

from ...infrastructure.config_manager import RunConfig
from ...dea.models import (
    DMUDataset,
    DeaModelsInterface,
    InfeasibilityReport,
    Mode,
    ModelInfeasibleError,
    Orientation,
    create_interface as create_models,
)
from ...dea.scalarize import ScalarizedResult, evaluate_dmu, weight_population
from ...dea.rank import RankError, RankReport, build_report
from .internal import dataset_io

logger = logging.getLogger("fdea.cli")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2


class CliError(Exception):
    pass


class DatasetFormatError(CliError):
    """Unreadable dataset file, located by path, 1-based row and column."""

    def __init__(self, message: str, path: str, row: Optional[int] = None,
                 column: Optional[str] = None):
        location = [path]
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column {column}")
        super().__init__(f"{', '.join(location)}: {message}")
        self.path = path
        self.row = row
        self.column = column


class EvaluationError(CliError):
    """Every infeasible (DMU, orientation) pair of one run."""

    def __init__(self, reports: Sequence[InfeasibilityReport]):
        self.reports = list(reports)
        super().__init__("\n".join(r.message for r in self.reports))


class InputFormat(Enum):
    AUTO = "auto"
    FUZZY_CSV = "fuzzy-csv"
    FUZZY_JSON = "fuzzy-json"
    RAW_CSV = "raw-csv"


_READERS = {
    InputFormat.FUZZY_CSV: dataset_io.read_fuzzy_csv,
    InputFormat.FUZZY_JSON: dataset_io.read_fuzzy_json,
    InputFormat.RAW_CSV: dataset_io.read_raw_csv,
}


def load_dataset(path: str, fmt: Union[str, InputFormat] = InputFormat.AUTO) -> DMUDataset:
    fmt = InputFormat(fmt)
    if not os.path.isfile(path):
        raise DatasetFormatError("file not found", path)
    try:
        if fmt is InputFormat.AUTO:
            fmt = InputFormat(dataset_io.sniff_format(path))
        dataset = _READERS[fmt](path)
    except dataset_io.ParseError as exc:
        raise DatasetFormatError(exc.message, path, exc.row, exc.column) from exc
    logger.info("Loaded %s as %s: %d DMUs, %d inputs, %d outputs",
                path, fmt.value, dataset.n, dataset.m, dataset.s)
    return dataset


def write_dataset(dataset: DMUDataset, path: str,
                  fmt: Union[str, InputFormat] = InputFormat.FUZZY_CSV) -> None:
    fmt = InputFormat(fmt)
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    if fmt is InputFormat.FUZZY_CSV:
        dataset_io.write_fuzzy_csv(dataset, path)
    elif fmt is InputFormat.FUZZY_JSON:
        dataset_io.write_fuzzy_json(dataset, path)
    else:
        raise CliError(f"cannot write datasets as {fmt.value}")


def load_external_ranks(path: str) -> Dict[str, float]:
    """id -> rank from a CSV with at least ``id`` and ``rank`` columns."""
    if not os.path.isfile(path):
        raise DatasetFormatError("file not found", path)
    try:
        df = pd.read_csv(path, dtype={"id": str}, skipinitialspace=True, comment="#")
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise DatasetFormatError(f"cannot parse CSV: {exc}", path) from exc
    for column in ("id", "rank"):
        if column not in df.columns:
            raise DatasetFormatError(f"missing required column {column!r}", path, column=column)
    ids = df["id"].astype(str).str.strip()
    duplicated = ids.duplicated()
    if duplicated.any():
        row = int(duplicated.to_numpy().nonzero()[0][0]) + 1
        raise DatasetFormatError(f"duplicate id {ids[duplicated].iloc[0]!r}", path,
                                 row=row, column="id")
    ranks = pd.to_numeric(df["rank"], errors="coerce")
    if ranks.isna().any():
        row = int(ranks.isna().to_numpy().nonzero()[0][0]) + 1
        raise DatasetFormatError("rank is not a number", path, row=row, column="rank")
    return {i: float(r) for i, r in zip(ids, ranks)}


def orientations(run: RunConfig) -> Tuple[Orientation, ...]:
    if run.orientation == "both":
        return (Orientation.OPTIMISTIC, Orientation.PESSIMISTIC)
    return (Orientation(run.orientation),)


def population_size(dataset: DMUDataset, run: RunConfig) -> int:
    return run.population_multiplier * (dataset.m + dataset.s)


def run_metadata(dataset: DMUDataset, run: RunConfig) -> Dict[str, Any]:
    return {
        "epsilon": run.epsilon,
        "seed": run.seed,
        "mode": run.mode,
        "population_size": population_size(dataset, run),
        "solver": run.solver,
    }


def evaluate(dataset: DMUDataset, run: RunConfig,
             models: Optional[DeaModelsInterface] = None) -> List[ScalarizedResult]:
    """
    Bounds and scalarized efficiency for every DMU and requested orientation.

    Output order is DMU order, then optimistic before pessimistic, whatever the
    worker count. Infeasible pairs are collected and raised together.
    """
    models = models or create_models({"epsilon": run.epsilon, "solver": run.solver})
    population = weight_population(dataset.m + dataset.s, seed=run.seed,
                                   multiplier=run.population_multiplier)
    mode = Mode(run.mode)
    tasks = [(k, o) for k in range(dataset.n) for o in orientations(run)]

    def work(task: Tuple[int, Orientation]) -> Union[ScalarizedResult, InfeasibilityReport]:
        k, orientation = task
        try:
            return evaluate_dmu(models, dataset, k, orientation, mode, population, run.seed)
        except ModelInfeasibleError as exc:
            return exc.report

    logger.info("Evaluating %d DMUs (%s, %d weights, %d workers)",
                dataset.n, mode.value, len(population), run.workers)
    if run.workers > 1:
        with ThreadPoolExecutor(max_workers=run.workers) as pool:
            outcomes = list(pool.map(work, tasks))
    else:
        outcomes = [work(t) for t in tasks]
    failures = [o for o in outcomes if isinstance(o, InfeasibilityReport)]
    if failures:
        for report in failures:
            logger.warning(report.message, extra={"dmu": report.dmu_id})
        raise EvaluationError(failures)
    return [o for o in outcomes if isinstance(o, ScalarizedResult)]


def rank_and_report(results: Sequence[ScalarizedResult], dataset: DMUDataset,
                    run: RunConfig, external_ranks: Optional[Mapping[str, float]] = None,
                    external_label: str = "external",
                    reference_rho: Optional[float] = None) -> RankReport:
    optimistic = {r.dmu_id: r.efficiency for r in results
                  if r.orientation is Orientation.OPTIMISTIC}
    pessimistic = {r.dmu_id: r.efficiency for r in results
                   if r.orientation is Orientation.PESSIMISTIC}
    missing = [i for i in dataset.ids if i not in optimistic or i not in pessimistic]
    if missing:
        raise CliError(f"ranking needs both orientations; missing for {missing}")
    labels = {d.id: d.label for d in dataset.dmus}
    try:
        report = build_report({i: optimistic[i] for i in dataset.ids},
                              {i: pessimistic[i] for i in dataset.ids},
                              labels, run_metadata(dataset, run), run.classify_tol)
        if external_ranks is not None:
            report = report.compare(external_ranks, external_label, reference_rho)
    except RankError as exc:
        raise CliError(str(exc)) from exc
    return report
