"""Fuzzy-csv, fuzzy-json and raw-observation dataset readers and writers."""

from typing import Any, Dict, List, Optional, Tuple
import json
import os
import re

import pandas as pd

from ....numerics.tfn import TFN, TfnError, from_observations
from ....dea.models import DMUDataset, DMURecord, DatasetError

FUZZY_COLUMN = re.compile(r"^(in|out):(.+):(L|M|U)$")
RAW_COLUMN = re.compile(r"^(in|out):(.+)$")
BOUND_SUFFIXES = ("L", "M", "U")


class ParseError(Exception):
    """Parse failure located by 1-based data row and column name."""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.row = row
        self.column = column


def _read_csv(path: str) -> pd.DataFrame:
    try:
        df = pd.read_csv(path, dtype={"id": str, "label": str}, keep_default_na=False,
                         float_precision="round_trip", skipinitialspace=True)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot parse CSV: {exc}") from exc
    df.columns = [str(c).strip() for c in df.columns]
    return df


def _require_columns(df: pd.DataFrame, names: Tuple[str, ...]) -> None:
    for name in names:
        if name not in df.columns:
            raise ParseError(f"missing required column {name!r}", column=name)


def _numeric(df: pd.DataFrame, column: str) -> List[float]:
    values = pd.to_numeric(df[column].replace("", float("nan")), errors="coerce")
    bad = values.isna().to_numpy().nonzero()[0]
    if len(bad):
        row = int(bad[0]) + 1
        raise ParseError(f"not a number: {df[column].iloc[bad[0]]!r}", row=row, column=column)
    return [float(v) for v in values.tolist()]


def _build(records: List[Tuple[str, str, List[TFN], List[TFN]]],
           input_names: List[str], output_names: List[str]) -> DMUDataset:
    try:
        return DMUDataset([DMURecord(i, label, xs, ys) for i, label, xs, ys in records],
                          input_names, output_names)
    except DatasetError as exc:
        raise ParseError(str(exc), row=exc.row, column=exc.column) from exc


def _tfn(values: Tuple[float, float, float], row: int, column: str) -> TFN:
    try:
        return TFN(*values)
    except TfnError as exc:
        raise ParseError(str(exc), row=row, column=column) from exc


def _split_fuzzy_header(columns: List[str]) -> Tuple[List[str], List[str]]:
    names: Dict[str, List[str]] = {"in": [], "out": []}
    suffixes: Dict[Tuple[str, str], List[str]] = {}
    for column in columns:
        match = FUZZY_COLUMN.match(column)
        if not match:
            raise ParseError(
                f"unexpected column {column!r}; want in:<name>:L|M|U or out:<name>:L|M|U",
                column=column,
            )
        kind, name, bound = match.groups()
        if (kind, name) not in suffixes:
            names[kind].append(name)
            suffixes[(kind, name)] = []
        suffixes[(kind, name)].append(bound)
    for (kind, name), found in suffixes.items():
        if tuple(found) != BOUND_SUFFIXES:
            raise ParseError(f"{kind}:{name} needs L, M and U columns in that order, got {found}",
                             column=f"{kind}:{name}")
    return names["in"], names["out"]


def read_fuzzy_csv(path: str) -> DMUDataset:
    df = _read_csv(path)
    _require_columns(df, ("id", "label"))
    if list(df.columns[:2]) != ["id", "label"]:
        raise ParseError("first columns must be id,label", column=str(df.columns[0]))
    input_names, output_names = _split_fuzzy_header(list(df.columns[2:]))
    numbers = {c: _numeric(df, c) for c in df.columns[2:]}
    records = []
    for r in range(len(df)):
        row = r + 1
        triples = {}
        for kind, names in (("in", input_names), ("out", output_names)):
            triples[kind] = [
                _tfn(tuple(numbers[f"{kind}:{n}:{b}"][r] for b in BOUND_SUFFIXES),
                     row, f"{kind}:{n}")
                for n in names
            ]
        records.append((df["id"].iloc[r].strip(), df["label"].iloc[r].strip(),
                        triples["in"], triples["out"]))
    return _build(records, input_names, output_names)


def read_fuzzy_json(path: str) -> DMUDataset:
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    for key in ("inputs", "outputs", "dmus"):
        if not isinstance(data.get(key), list):
            raise ParseError(f"missing list {key!r}", column=key)
    input_names = [str(n) for n in data["inputs"]]
    output_names = [str(n) for n in data["outputs"]]
    records = []
    for row, item in enumerate(data["dmus"], start=1):
        if not isinstance(item, dict) or "id" not in item:
            raise ParseError("each DMU needs an id", row=row, column="id")
        triples = {}
        for key, kind, names in (("inputs", "in", input_names), ("outputs", "out", output_names)):
            values = item.get(key) or {}
            cells = []
            for name in names:
                column = f"{kind}:{name}"
                raw = values.get(name)
                if not isinstance(raw, list) or len(raw) != 3:
                    raise ParseError(f"expected [L, M, U], got {raw!r}", row=row, column=column)
                try:
                    triple = tuple(float(v) for v in raw)
                except (TypeError, ValueError) as exc:
                    raise ParseError(f"not a number in {raw!r}", row=row, column=column) from exc
                cells.append(_tfn(triple, row, column))
            triples[kind] = cells
        records.append((str(item["id"]), str(item.get("label", item["id"])),
                        triples["in"], triples["out"]))
    return _build(records, input_names, output_names)


def read_raw_csv(path: str) -> DMUDataset:
    """
    One row per DMU and period; every variable column becomes
    (min, mean, max) over the DMU's rows.
    """
    df = _read_csv(path)
    _require_columns(df, ("id", "label", "period"))
    variables = [c for c in df.columns if c not in ("id", "label", "period")]
    input_names, output_names = [], []
    for column in variables:
        match = RAW_COLUMN.match(column)
        if not match:
            raise ParseError(f"unexpected column {column!r}; want in:<name> or out:<name>",
                             column=column)
        (input_names if match.group(1) == "in" else output_names).append(match.group(2))
    numbers = pd.DataFrame({c: _numeric(df, c) for c in variables})
    numbers["id"] = df["id"].str.strip()
    labels = df.assign(id=numbers["id"]).groupby("id", sort=False)["label"].first()
    records = []
    for row, (dmu_id, group) in enumerate(numbers.groupby("id", sort=False), start=1):
        xs = [from_observations(group[f"in:{n}"].tolist()) for n in input_names]
        ys = [from_observations(group[f"out:{n}"].tolist()) for n in output_names]
        records.append((dmu_id, str(labels[dmu_id]).strip(), xs, ys))
    return _build(records, input_names, output_names)


def sniff_format(path: str) -> str:
    ext = os.path.splitext(path)[1].lower()
    if ext == ".json":
        return "fuzzy-json"
    header = _read_csv(path).columns
    return "raw-csv" if "period" in header else "fuzzy-csv"


def dataset_frame(dataset: DMUDataset) -> pd.DataFrame:
    rows: List[Dict[str, Any]] = []
    for dmu in dataset.dmus:
        row: Dict[str, Any] = {"id": dmu.id, "label": dmu.label}
        for kind, names, values in (("in", dataset.input_names, dmu.inputs),
                                    ("out", dataset.output_names, dmu.outputs)):
            for name, tfn in zip(names, values):
                for suffix, v in zip(BOUND_SUFFIXES, tfn.as_tuple()):
                    row[f"{kind}:{name}:{suffix}"] = v
        rows.append(row)
    return pd.DataFrame(rows)


def write_fuzzy_csv(dataset: DMUDataset, path: str) -> None:
    dataset_frame(dataset).to_csv(path, index=False, lineterminator="\n")


def dataset_dict(dataset: DMUDataset) -> Dict[str, Any]:
    return {
        "inputs": list(dataset.input_names),
        "outputs": list(dataset.output_names),
        "dmus": [
            {
                "id": dmu.id,
                "label": dmu.label,
                "inputs": {n: list(t.as_tuple()) for n, t in zip(dataset.input_names, dmu.inputs)},
                "outputs": {
                    n: list(t.as_tuple()) for n, t in zip(dataset.output_names, dmu.outputs)
                },
            }
            for dmu in dataset.dmus
        ],
    }


def write_fuzzy_json(dataset: DMUDataset, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(dataset_dict(dataset), f, indent=2)
        f.write("\n")
