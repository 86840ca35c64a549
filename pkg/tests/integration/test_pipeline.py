"""
End-to-end tests through the fdea entry point.
"""

import json

import numpy as np
import pytest
from src.modules.numerics.tfn import TFN
from src.modules.dea.models import DMUDataset, DMURecord, create_interface as create_models
from src.modules.frontend.cli import (
    EXIT_OK,
    EXIT_INFEASIBLE,
    load_dataset,
    write_dataset,
    main,
)


@pytest.mark.integration
class TestPipeline:
    """Determinism, round trips and exit codes."""

    @pytest.mark.parametrize("fmt", ["csv", "json"])
    def test_byte_identical_reports(self, guo_tanaka_path, tmp_path, fmt):
        first, second = tmp_path / f"a.{fmt}", tmp_path / f"b.{fmt}"
        for out in (first, second):
            assert main(["rank", guo_tanaka_path, "--format", fmt, "-o", str(out)]) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()

    def test_round_trip_through_cli(self, guo_tanaka_path, tmp_path, capsys):
        copy = tmp_path / "copy.json"
        write_dataset(load_dataset(guo_tanaka_path), str(copy), "fuzzy-json")
        assert main(["evaluate", guo_tanaka_path, "--format", "csv"]) == EXIT_OK
        original = capsys.readouterr().out
        assert main(["evaluate", str(copy), "--format", "csv"]) == EXIT_OK
        assert capsys.readouterr().out == original

    def test_literal_mode_exit_code(self, guo_tanaka_path, capsys):
        assert main(["rank", guo_tanaka_path, "--mode", "literal"]) == EXIT_INFEASIBLE
        assert "conflicting normalizations" in capsys.readouterr().err

    def test_crisp_collapse(self, tmp_path, capsys):
        rng = np.random.default_rng(4)
        xs, ys = rng.uniform(1, 10, (5, 2)), rng.uniform(1, 10, (5, 1))
        ds = DMUDataset([DMURecord(f"U{j}", "", [TFN.crisp(v) for v in xs[j]],
                                   [TFN.crisp(v) for v in ys[j]]) for j in range(5)],
                        ["a", "b"], ["c"])
        path = tmp_path / "crisp.csv"
        write_dataset(ds, str(path))
        assert main(["evaluate", str(path), "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        models = create_models()
        for item in data["results"]:
            k = ds.index_of(item["id"])
            if item["orientation"] == "optimistic":
                expected, _ = models.crisp_optimistic(ds, k)
            else:
                expected, _ = models.crisp_pessimistic(ds, k)
            assert item["efficiency"] == pytest.approx(expected, abs=1e-6)
            assert item["lo"] == pytest.approx(item["hi"], abs=1e-9)


@pytest.mark.integration
class TestMirrorImageTies:
    """DMUs that are mirror images under swapping both inputs and both outputs."""

    @pytest.fixture
    def mirror_path(self, tmp_path):
        rows = {
            "A": ((2, 2), (3, 3)),
            "B": ((4, 4), (3, 3)),
            "C": ((1, 3), (2, 4)),
            "D": ((3, 1), (4, 2)),
            "E": ((2, 3), (5, 1)),
            "F": ((3, 2), (1, 5)),
        }
        ds = DMUDataset([DMURecord(i, i, [TFN.crisp(v) for v in x], [TFN.crisp(v) for v in y])
                         for i, (x, y) in rows.items()], ["x1", "x2"], ["y1", "y2"])
        path = tmp_path / "mirror.csv"
        write_dataset(ds, str(path))
        return str(path)

    def test_mirror_pairs_tie(self, mirror_path, tmp_path, capsys):
        cfg = tmp_path / "tol0.yaml"
        cfg.write_text("run:\n  classify_tol: 0\n")
        assert main(["rank", mirror_path, "--format", "json", "--config", str(cfg)]) == EXIT_OK
        rows = {r["id"]: r for r in json.loads(capsys.readouterr().out)["rows"]}
        for a, b in (("C", "D"), ("E", "F")):
            assert rows[a]["geometric"] == pytest.approx(rows[b]["geometric"], abs=1e-9)
            assert rows[a]["rank"] == rows[b]["rank"]
            assert rows[a]["tied"] and rows[b]["tied"]
