"""Run configuration data model with YAML persistence."""

from dataclasses import dataclass, asdict, fields
from typing import Dict, Any
import yaml
import os


VALID_MODES = ("per_bound", "literal", "modal")
VALID_ORIENTATIONS = ("optimistic", "pessimistic", "both")
VALID_FORMATS = ("table", "csv", "json")
VALID_SOLVERS = ("simplex", "highs")
VALID_LOG_FORMATS = ("text", "json")


@dataclass
class RunConfig:
    epsilon: float = 1e-5
    seed: int = 42
    population_multiplier: int = 100
    mode: str = "per_bound"
    orientation: str = "both"
    output_format: str = "table"
    classify_tol: float = 1e-6
    workers: int = 1
    solver: str = "simplex"
    log_level: str = "WARNING"
    log_format: str = "text"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunConfig':
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise TypeError(f"Unknown run options: {', '.join(unknown)}")
        return cls(**data)

    def save(self, path: str) -> None:
        os.makedirs(os.path.dirname(path) or '.', exist_ok=True)
        with open(path, 'w') as f:
            yaml.dump({"run": self.to_dict()}, f, default_flow_style=False)

    @classmethod
    def load(cls, path: str) -> 'RunConfig':
        with open(path, 'r') as f:
            data = yaml.safe_load(f) or {}
        return cls.from_dict(data.get("run", {}))
