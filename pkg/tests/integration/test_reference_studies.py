"""
Integration tests on the two bundled studies.

Bound values are vertex-enumeration references at epsilon = 1e-5. Published
scores are checked only where they follow from the model; the rest are
reported through the comparison section. End-to-end ranks are pinned for the
default run (seed 42, per_bound, simplex).
"""

import csv
import os

import pytest
from src.modules.infrastructure.config_manager import RunConfig
from src.modules.dea.models import Mode, Orientation, create_interface as create_models
from src.modules.dea.rank import build_report, spearman
from src.modules.frontend.cli import evaluate, rank_and_report, load_external_ranks

# id: (optimistic lo, mid, hi), (pessimistic lo, mid, hi)
IIM_PER_BOUND = {
    "D1": ((0.317758, 0.439622, 0.894451), (1.781548, 2.440287, 3.859748)),
    "D2": ((0.309839, 0.421712, 0.841718), (1.697684, 2.371829, 3.474628)),
    "D3": ((0.416467, 0.490816, 0.769344), (1.982288, 2.729405, 4.270749)),
    "D4": ((0.418146, 0.477784, 0.767462), (1.0, 2.706448, 4.311717)),
    "D5": ((0.435890, 0.568839, 0.859822), (1.015591, 2.652020, 4.860301)),
    "D6": ((0.407169, 0.476505, 0.738990), (1.950195, 2.638179, 4.157351)),
    "D7": ((0.179796, 0.362329, 1.0), (1.0, 2.031825, 5.553804)),
    "D8": ((0.195339, 0.374086, 1.0), (1.0, 2.115515, 5.645929)),
    "D9": ((0.219242, 0.405898, 0.917733), (1.126163, 2.227562, 5.092801)),
    "D10": ((0.362016, 0.558290, 1.0), (1.496104, 2.367990, 4.179260)),
    "D11": ((0.378374, 0.490887, 0.766135), (1.0, 2.478582, 4.330742)),
    "D12": ((0.238637, 0.399639, 1.0), (1.0, 2.078556, 5.660374)),
    "D13": ((0.351132, 0.527446, 1.0), (1.578571, 2.545987, 4.363516)),
}

# id: (optimistic lo, hi), (pessimistic lo, hi)
IIM_MODAL = {
    "D1": ((0.413403, 0.618818), (2.338520, 2.673042)),
    "D2": ((0.408873, 0.591456), (2.191564, 2.406697)),
    "D3": ((0.468681, 0.658187), (2.463714, 2.892463)),
    "D4": ((0.460472, 0.548449), (1.081619, 3.003746)),
    "D5": ((0.486897, 0.608873), (1.632386, 2.836085)),
    "D6": ((0.458865, 0.525530), (2.531327, 2.799586)),
    "D7": ((0.317079, 0.461536), (1.792601, 2.554926)),
    "D8": ((0.315260, 0.531771), (1.406071, 3.007191)),
    "D9": ((0.311895, 0.573629), (1.765981, 3.070890)),
    "D10": ((0.444076, 0.713894), (2.221840, 2.514100)),
    "D11": ((0.396653, 0.578428), (1.209359, 2.920097)),
    "D12": ((0.328057, 0.532932), (1.664746, 2.771488)),
    "D13": ((0.486780, 0.575668), (2.320713, 2.681850)),
}

GUO_TANAKA_PUBLISHED_OPTIMISTIC = {"A": 0.6579, "B": 0.7347, "C": 0.6822, "D": 0.8061, "E": 0.8011}


@pytest.mark.integration
class TestGuoTanaka:
    """Five-DMU study end to end."""

    @pytest.fixture
    def report(self, guo_tanaka, data_dir):
        run = RunConfig()
        external = load_external_ranks(os.path.join(data_dir, "wang_ranks.csv"))
        return rank_and_report(evaluate(guo_tanaka, run), guo_tanaka, run, external,
                               "Wang", 0.883)

    def test_pessimistic_b_is_maximal(self, report):
        pessimistic = {row.id: row.pessimistic for row in report.rows}
        assert pessimistic["B"] == pytest.approx(1.4335, abs=0.10)
        assert max(pessimistic, key=pessimistic.get) == "B"

    def test_b_ranks_first(self, report):
        assert report.row("B").rank == 1

    def test_default_run_ranks(self, report):
        """Seed 42, per_bound, 400 weight vectors."""
        assert report.ranks == [5, 1, 4, 2, 3]
        assert not report.has_ties

    def test_published_optimistic_within_upper_bound(self, guo_tanaka):
        """Published optimistic scores never exceed the optimistic upper bound."""
        models = create_models()
        for dmu_id, published in GUO_TANAKA_PUBLISHED_OPTIMISTIC.items():
            b = models.bounds(guo_tanaka, guo_tanaka.index_of(dmu_id), Orientation.OPTIMISTIC)
            assert published <= b.hi + 1e-9
        hi = {i: models.bounds(guo_tanaka, guo_tanaka.index_of(i), Orientation.OPTIMISTIC).hi
              for i in "AB"}
        assert hi["A"] == pytest.approx(0.8952, abs=1e-4)
        assert hi["B"] == pytest.approx(0.964, abs=1e-3)

    def test_ranges_and_geometric(self, report):
        for row in report.rows:
            assert 0 < row.optimistic <= 1 + 1e-7
            assert row.pessimistic >= 1 - 1e-7
            assert row.optimistic - 1e-7 <= row.geometric <= row.pessimistic + 1e-7
            assert row.geometric == pytest.approx((row.optimistic * row.pessimistic) ** 0.5,
                                                  abs=1e-9)

    def test_optimistic_converges_to_upper_bound(self, guo_tanaka):
        models = create_models()
        for r in evaluate(guo_tanaka, RunConfig(orientation="optimistic")):
            b = models.bounds(guo_tanaka, guo_tanaka.index_of(r.dmu_id), Orientation.OPTIMISTIC)
            assert b.hi - 0.15 * (b.hi - b.lo) <= r.efficiency <= b.hi + 1e-9

    def test_comparison_reported(self, report):
        assert -1 <= report.comparison.rho <= 1
        assert report.comparison.reference_rho == 0.883

    def test_wang_rho_against_published_ranks(self):
        assert spearman([4, 1, 5, 3, 2], [3, 1, 2, 1, 1]) == pytest.approx(0.782624, abs=1e-6)


@pytest.mark.integration
class TestIIM:
    """Thirteen-institute study."""

    @pytest.fixture
    def models(self):
        return create_models({"epsilon": 1e-5})

    @pytest.mark.parametrize("dmu_id", sorted(IIM_PER_BOUND))
    def test_per_bound_values(self, models, iim, dmu_id):
        k = iim.index_of(dmu_id)
        expected_o, expected_p = IIM_PER_BOUND[dmu_id]
        o = models.bounds(iim, k, Orientation.OPTIMISTIC)
        p = models.bounds(iim, k, Orientation.PESSIMISTIC)
        assert (o.lo, o.mid, o.hi) == pytest.approx(expected_o, abs=1e-5)
        assert (p.lo, p.mid, p.hi) == pytest.approx(expected_p, abs=1e-5)

    @pytest.mark.parametrize("dmu_id", ["D1", "D4", "D8", "D10"])
    def test_modal_values(self, models, iim, dmu_id):
        k = iim.index_of(dmu_id)
        expected_o, expected_p = IIM_MODAL[dmu_id]
        o = models.bounds(iim, k, Orientation.OPTIMISTIC, Mode.MODAL)
        p = models.bounds(iim, k, Orientation.PESSIMISTIC, Mode.MODAL)
        assert (o.lo, o.hi) == pytest.approx(expected_o, abs=1e-5)
        assert (p.lo, p.hi) == pytest.approx(expected_p, abs=1e-5)
        assert o.lo <= o.mid <= o.hi
        assert p.lo <= p.mid <= p.hi

    def test_published_scores_rank(self, data_dir):
        """The published score table reproduces its own ranking."""
        with open(os.path.join(data_dir, "iim_published_ranks.csv"), newline="") as f:
            rows = list(csv.DictReader(f))
        report = build_report({r["id"]: float(r["optimistic"]) for r in rows},
                              {r["id"]: float(r["pessimistic"]) for r in rows})
        assert report.ranks == [int(r["rank"]) for r in rows]
        assert report.row("D3").rank == 1
        assert report.row("D8").rank == 13
        top3 = {row.id for row in report.rows if row.rank <= 3}
        assert top3 == {"D1", "D2", "D3"}

    def test_end_to_end_report(self, iim, data_dir):
        run = RunConfig()
        external = load_external_ranks(os.path.join(data_dir, "iim_published_ranks.csv"))
        report = rank_and_report(evaluate(iim, run), iim, run, external, "published")
        assert report.row("D13").rank == 1
        assert report.row("D11").rank == 13
        assert report.comparison.rho == pytest.approx(0.4835, abs=5e-4)
        for row in report.rows:
            assert 0 < row.optimistic <= 1 + 1e-7
            assert row.pessimistic >= 1 - 1e-7
