"""Bundled datasets shipped under src/data."""

from pathlib import Path
from typing import Dict

DATA_DIR = Path(__file__).resolve().parents[4] / "data"

FIXTURES: Dict[str, str] = {
    "guo_tanaka.csv": "Five DMUs, two fuzzy inputs and outputs (Guo and Tanaka example)",
    "iim.csv": "Thirteen Indian Institutes of Management, four years fuzzified",
    "wang_ranks.csv": "Centroid-based ranks of the Guo-Tanaka DMUs, for comparison",
    "iim_published_ranks.csv":
        "Published optimistic, pessimistic and geometric IIM scores and ranks",
}


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise KeyError(name)
    return DATA_DIR / name
