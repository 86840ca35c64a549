"""Table, CSV and JSON rendering of evaluation results and rank reports."""

from typing import Any, Dict, List, Sequence
import json

import pandas as pd

from ....dea.models import DMUDataset
from ....dea.rank import RankReport
from ....dea.scalarize import ScalarizedResult

FLOAT_FORMAT = "%.6f"


def _json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _table(df: pd.DataFrame) -> str:
    if df.empty:
        return "(no rows)\n"
    return df.to_string(index=False, float_format=lambda v: FLOAT_FORMAT % v) + "\n"


def _csv(df: pd.DataFrame) -> str:
    return df.to_csv(index=False, float_format="%.10g", lineterminator="\n")


def _metadata_lines(metadata: Dict[str, Any]) -> List[str]:
    return [f"{k}={v}" for k, v in sorted(metadata.items())]


def _comments(lines: Sequence[str]) -> str:
    return "".join(f"# {line}\n" for line in lines)


def _footer(metadata: Dict[str, Any]) -> str:
    meta = ", ".join(_metadata_lines(metadata))
    return f"\n{meta}\n" if meta else ""


def result_record(result: ScalarizedResult, dataset: DMUDataset) -> Dict[str, Any]:
    dmu = dataset.dmus[dataset.index_of(result.dmu_id)]
    record: Dict[str, Any] = {
        "id": result.dmu_id,
        "label": dmu.label,
        "orientation": result.orientation.value,
        "mode": result.mode.value,
        "lo": result.bounds.lo,
        "mid": result.bounds.mid,
        "hi": result.bounds.hi,
        "efficiency": result.efficiency,
    }
    for i, w in enumerate(result.best_weights.w, start=1):
        record[f"w{i}"] = w
    for name, u in zip(dataset.input_names, result.multipliers.u):
        record[f"u:{name}"] = u
    for name, v in zip(dataset.output_names, result.multipliers.v):
        record[f"v:{name}"] = v
    return record


def results_json(results: Sequence[ScalarizedResult], dataset: DMUDataset,
                 metadata: Dict[str, Any]) -> Dict[str, Any]:
    """Full provenance: every bound's multipliers, the objective triple and the weights."""
    items: List[Dict[str, Any]] = []
    for result in results:
        item = result_record(result, dataset)
        item["objective_triple"] = list(result.objective_triple)
        item["population_size"] = result.population_size
        item["bound_multipliers"] = {
            name: result.bounds.multipliers(b).as_dict(dataset.input_names, dataset.output_names)
            for b, name in enumerate(("lo", "mid", "hi"))
        }
        items.append(item)
    return {"metadata": dict(metadata), "results": items}


def render_results(results: Sequence[ScalarizedResult], dataset: DMUDataset,
                   metadata: Dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return _json(results_json(results, dataset, metadata))
    df = pd.DataFrame([result_record(r, dataset) for r in results])
    if fmt == "csv":
        return _csv(df) + _comments(_metadata_lines(metadata))
    return _table(df) + _footer(metadata)


def _report_frame(report: RankReport) -> pd.DataFrame:
    df = pd.DataFrame([row.to_dict() for row in report.rows])
    if report.comparison is not None:
        df["external_rank"] = list(report.comparison.external_ranks)
    return df


def _comparison_lines(report: RankReport) -> List[str]:
    comparison = report.comparison
    if comparison is None:
        return []
    lines = [f"spearman_rho vs {comparison.label}: {comparison.rho:.6f}"]
    if comparison.reference_rho is not None:
        lines.append(f"reference rho: {comparison.reference_rho:.6f}")
    return lines


def render_report(report: RankReport, fmt: str) -> str:
    if fmt == "json":
        return _json(report.to_dict())
    df = _report_frame(report)
    if fmt == "csv":
        return _csv(df) + _comments(_comparison_lines(report) + _metadata_lines(report.metadata))
    columns = ["id", "label", "optimistic", "pessimistic", "geometric", "rank", "tied"]
    if report.comparison is not None:
        columns.append("external_rank")
    parts = [_table(df[columns])]
    parts.append("\nRecommendation\n")
    for row in sorted(report.rows, key=lambda r: (r.rank, report.ids.index(r.id))):
        tie = " (tied)" if row.tied else ""
        parts.append(f"  {row.rank}{tie}. {row.id} {row.label}: {row.classification}; "
                     f"dominated by {row.recommendation}\n")
    if report.comparison is not None:
        parts.append("\nComparison\n")
        parts.extend(f"  {line}\n" for line in _comparison_lines(report))
    parts.append(_footer(report.metadata))
    return "".join(parts)


def render_comparison(report: RankReport, fmt: str) -> str:
    comparison = report.comparison
    df = pd.DataFrame({
        "id": report.ids,
        "rank": report.ranks,
        "external_rank": list(comparison.external_ranks),
    })
    if fmt == "json":
        return _json({"metadata": dict(report.metadata), "comparison": comparison.to_dict(),
                      "ranks": [
                          {"id": i, "rank": r, "external_rank": e}
                          for i, r, e in zip(report.ids, report.ranks, comparison.external_ranks)
                      ]})
    if fmt == "csv":
        return _csv(df) + _comments(_comparison_lines(report) + _metadata_lines(report.metadata))
    return (_table(df) + "\n" + "".join(f"{line}\n" for line in _comparison_lines(report))
            + _footer(report.metadata))
