"""
Lab Testleri - Üreteçler, Dosyalar, Deneyler, Çizim
Çalıştırma: cd harmonic-scheduler && python -m pytest tests/test_lab.py -v
"""

import json
import os
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from domain.instance import make_instance
from feasibility.models import Packing, Placement, Schedule
from feasibility.oracle import oracle_validate_schedule
from lab.gen_config import DifficultConfig, SplitSchemeConfig, difficult_preset


def look_ahead():
    return make_instance(
        [4, 8, 16],
        [(1, 1, 4), (2, 1, 8), (3, 1, 8), (4, 2, 16), (5, 2, 16), (6, 2, 16), (7, 2, 16)],
        name="look-ahead",
    )


def three_jobs():
    return make_instance([2, 4], [(1, 1, 2), (2, 1, 4), (3, 1, 4)], name="three")


# ============================================================
# Üreteçler
# ============================================================

class TestSplitScheme:
    def test_zero_iterations(self):
        """Deneme yoksa tek iş: c = T = T_0."""
        from lab.generators import generate_split_scheme
        inst = generate_split_scheme(SplitSchemeConfig(iterations=0))
        assert len(inst) == 1
        assert inst.jobs[0].processing_time == 10
        assert inst.period_of(inst.jobs[0]) == 10

    @pytest.mark.parametrize("seed", range(10))
    def test_full_utilization(self, seed):
        """Bölme ve ayırma U'yu korur."""
        from lab.generators import generate_split_scheme
        inst = generate_split_scheme(SplitSchemeConfig(seed=seed))
        assert inst.utilization == 1
        assert inst.metadata["scheme"] == "split"
        assert all(j.processing_time >= 1 for j in inst.jobs)

    def test_deterministic(self):
        from lab.generators import generate_split_scheme
        cfg = SplitSchemeConfig(seed=42, iterations=80)
        assert generate_split_scheme(cfg) == generate_split_scheme(cfg)

    def test_single_divide(self):
        """Tek bölme: T_0=4, b=(2,) → iki iş, c=4, T=8."""
        from lab.generators import generate_split_scheme
        inst = generate_split_scheme(
            SplitSchemeConfig(base_period=4, base_vector=(2,), iterations=1, divide_prob=1.0)
        )
        assert [(j.processing_time, inst.period_of(j)) for j in inst.jobs] == [(4, 8), (4, 8)]

    def test_single_split(self):
        """Tek ayırma: 10 → 5 + 5."""
        from lab.generators import generate_split_scheme
        inst = generate_split_scheme(SplitSchemeConfig(iterations=1, divide_prob=0.0))
        assert [j.processing_time for j in inst.jobs] == [5, 5]

    def test_min_processing_time(self):
        """Parça en küçük sürenin altına düşecekse ayırma reddedilir."""
        from lab.generators import generate_split_scheme
        inst = generate_split_scheme(
            SplitSchemeConfig(iterations=200, divide_prob=0.0, min_processing_time=3)
        )
        assert all(j.processing_time >= 3 for j in inst.jobs)
        assert inst.utilization == 1

    def test_random_split_mode(self):
        from lab.generators import generate_split_scheme
        inst = generate_split_scheme(SplitSchemeConfig(split_mode="random", seed=3, min_processing_time=2))
        assert inst.utilization == 1
        assert all(j.processing_time >= 2 for j in inst.jobs)

    def test_split_ignores_save_prob(self):
        from lab.generators import generate_split_scheme
        cfg = SplitSchemeConfig(seed=5, save_prob=0.9)
        inst = generate_split_scheme(cfg)
        assert inst.metadata["saved"] == []

    def test_modified_scheme_saves(self):
        """π_save = 1: başlangıç işi ayrılır, eşit ağırlıklı iki işten çekilen korunur."""
        from lab.generators import generate_modified_scheme
        inst = generate_modified_scheme(
            SplitSchemeConfig(iterations=2, divide_prob=0.0, save_prob=1.0)
        )
        assert [j.processing_time for j in inst.jobs] == [5, 5]
        assert len(inst.metadata["saved"]) == 1
        assert inst.metadata["saved"][0] in (1, 2)
        assert inst.metadata["scheme"] == "modified"

    def test_last_eligible_job_keeps_splitting(self):
        """Tek uygun iş kaldığında korunmaz; üretim devam eder."""
        from lab.generators import generate_modified_scheme
        inst = generate_modified_scheme(
            SplitSchemeConfig(iterations=3, divide_prob=0.0, save_prob=1.0)
        )
        assert len(inst) == 3
        assert len(inst.metadata["saved"]) == 1
        assert inst.utilization == 1

    @pytest.mark.parametrize("save_prob", [0.3, 1.0])
    def test_modified_scheme_never_single_job(self, save_prob):
        from lab.generators import generate_modified_scheme
        for seed in range(50):
            inst = generate_modified_scheme(
                SplitSchemeConfig(base_period=800, seed=seed, save_prob=save_prob)
            )
            assert len(inst) >= 2
            assert len(inst.metadata["saved"]) < len(inst)

    def test_modified_scheme_keeps_utilization(self):
        from lab.generators import generate_modified_scheme
        for seed in range(5):
            inst = generate_modified_scheme(SplitSchemeConfig(seed=seed, save_prob=0.3))
            assert inst.utilization == 1

    @pytest.mark.parametrize("kwargs", [
        {"base_period": 0},
        {"base_vector": (2, 1)},
        {"divide_prob": 1.5},
        {"save_prob": -0.1},
        {"split_mode": "halves"},
        {"min_processing_time": 11},
    ])
    def test_invalid_config(self, kwargs):
        from domain.errors import ConfigInvalidError
        with pytest.raises(ConfigInvalidError):
            SplitSchemeConfig(**kwargs)


class TestDifficult:
    def test_two_levels(self):
        from lab.generators import generate_difficult_certified
        inst, certificate = generate_difficult_certified(DifficultConfig(levels=2, seed=1))
        assert inst.period_set.periods == (800, 1600)
        assert inst.utilization == 1
        assert oracle_validate_schedule(inst, certificate)

    @pytest.mark.parametrize("seed", range(3))
    def test_certificate_is_valid(self, seed):
        from lab.generators import generate_difficult_certified
        cfg = DifficultConfig(ratio=3, levels=3, base_period=60, c_min=5, seed=seed)
        inst, certificate = generate_difficult_certified(cfg)
        assert inst.utilization == 1
        assert inst.metadata["scheme"] == "difficult"
        assert oracle_validate_schedule(inst, certificate)

    @pytest.mark.parametrize("total", [0, 3, 5, 9, 30, 100, 257])
    def test_fill_is_exact(self, total):
        """Parçalar toplamı tam verir ve w'ye sığar; total ≥ c_min ise hepsi ≥ c_min."""
        import numpy as np
        from lab.generators import _fill
        cfg = DifficultConfig(base_period=100, c_min=5)
        rng = np.random.default_rng(total)
        for _ in range(200):
            pieces = _fill(rng, total, cfg)
            assert sum(pieces) == total
            assert all(1 <= p <= 100 for p in pieces)
            if total >= cfg.c_min:
                assert all(p >= cfg.c_min for p in pieces)

    def test_fill_samples_uniformly(self):
        """Kalan w'den küçükken ilk parça [c_min, kalan] üzerinde düzgün dağılır."""
        import numpy as np
        from lab.generators import _fill
        cfg = DifficultConfig(base_period=100, c_min=5)
        rng = np.random.default_rng(11)
        firsts = [_fill(rng, 30, cfg)[0] for _ in range(4000)]
        # 5..25 her biri 1/26, 26..30 kalanı yutup 30 olur (5/26)
        assert np.mean(firsts) == pytest.approx(465 / 26, abs=1.0)
        assert min(firsts) == 5
        assert sum(1 for x in firsts if x == 30) / len(firsts) < 0.3
        low = sum(1 for x in firsts if x <= 12) / len(firsts)
        assert low == pytest.approx(8 / 26, abs=0.05)

    def test_deterministic(self):
        from lab.generators import generate_difficult
        cfg = DifficultConfig(ratio=2, levels=4, base_period=100, c_min=5, seed=9)
        assert generate_difficult(cfg) == generate_difficult(cfg)

    def test_single_level_rejected(self):
        from domain.errors import ConfigInvalidError
        with pytest.raises(ConfigInvalidError):
            DifficultConfig(levels=1)

    def test_presets(self):
        from domain.errors import ConfigInvalidError
        cfg = difficult_preset("D_5^6", seed=2)
        assert (cfg.ratio, cfg.levels, cfg.seed) == (5, 6, 2)
        with pytest.raises(ConfigInvalidError):
            difficult_preset("D_7^7")

    def test_name_carries_seed(self):
        from lab.generators import generate_difficult
        inst = generate_difficult(difficult_preset("D_20^3", seed=4, base_period=100))
        assert inst.name == "D_20^3-4"
        assert inst.period_set.periods == (100, 2000, 40000)


# ============================================================
# Dosyalar
# ============================================================

class TestFiles:
    def test_instance_round_trip(self, tmp_path):
        from lab.files import load_instance, save_instance
        path = save_instance(tmp_path / "look.json", look_ahead())
        loaded = load_instance(path)
        assert loaded == look_ahead()

    def test_name_from_file_stem(self, tmp_path):
        from lab.files import load_instance
        path = tmp_path / "unnamed.json"
        path.write_text(json.dumps({"periods": [2, 4], "jobs": [{"id": 1, "period": 4, "c": 1}]}))
        assert load_instance(path).name == "unnamed"

    def test_non_harmonic_file(self):
        from domain.errors import SchemaViolationError
        from lab.files import parse_instance
        with pytest.raises(SchemaViolationError):
            parse_instance('{"periods": [6, 10], "jobs": []}')

    def test_bad_json_reports_line(self):
        from domain.errors import InstanceParseError
        from lab.files import parse_instance
        with pytest.raises(InstanceParseError) as exc:
            parse_instance('{\n  "periods": [2, 4],\n  "jobs": [\n}')
        assert exc.value.line == 4

    def test_missing_periods_field(self):
        from domain.errors import InstanceParseError
        from lab.files import parse_instance
        with pytest.raises(InstanceParseError) as exc:
            parse_instance('{"jobs": []}')
        assert exc.value.field == "periods"

    def test_duplicate_job_id(self):
        from domain.errors import SchemaViolationError
        from lab.files import parse_instance
        text = json.dumps({"periods": [2], "jobs": [{"id": 1, "period": 2, "c": 1}] * 2})
        with pytest.raises(SchemaViolationError):
            parse_instance(text)

    def test_schedule_round_trip(self, tmp_path):
        from lab.files import load_schedule, save_schedule
        path = save_schedule(tmp_path / "s.json", Schedule({1: 0, 2: 1, 3: 3}), three_jobs())
        assert json.loads(path.read_text())["instance"] == "three"
        assert load_schedule(path, three_jobs()) == Schedule({1: 0, 2: 1, 3: 3})

    def test_schedule_job_set_mismatch(self, tmp_path):
        from domain.errors import SchemaViolationError
        from lab.files import load_schedule
        path = tmp_path / "s.json"
        path.write_text(json.dumps({"starts": {"1": 0, "2": 1}}))
        with pytest.raises(SchemaViolationError):
            load_schedule(path, three_jobs())
        assert load_schedule(path) == Schedule({1: 0, 2: 1})

    def test_negative_start(self, tmp_path):
        from domain.errors import SchemaViolationError
        from lab.files import load_schedule
        path = tmp_path / "s.json"
        path.write_text(json.dumps({"starts": {"1": -1}}))
        with pytest.raises(SchemaViolationError):
            load_schedule(path)


# ============================================================
# Deneyler
# ============================================================

class TestExperiments:
    def test_success_counts(self):
        from lab.experiments import run_success_experiment
        methods = ["S-FF", "T-FF", "S-BF", "LPT", "RG-FF-PES", "RG-FF-OPT"]
        table = run_success_experiment([look_ahead(), three_jobs()], methods, workers=1)
        assert table.total == 2
        assert table.counts["S-FF"] == 1
        assert table.counts["RG-FF-OPT"] == 2
        assert table.portfolio_counts["MA"] == 2
        assert table.portfolio_counts["MA"] >= max(table.counts.values())
        assert len(table.records) == 12

    def test_portfolio_needs_all_members(self):
        from lab.experiments import run_success_experiment
        table = run_success_experiment([three_jobs()], ["S-FF", "RG-FF-OPT"], workers=1)
        assert "M1" not in table.portfolio_counts
        assert "MA" not in table.portfolio_counts

    def test_unknown_method(self):
        from lab.experiments import run_success_experiment
        with pytest.raises(KeyError):
            run_success_experiment([three_jobs()], ["S-FF", "NOPE"], workers=1)

    def test_utilization_solved_immediately(self):
        """Hemen çözülen örnekte U_F = U, hiç iş çıkarılmaz."""
        from lab.experiments import run_utilization_experiment
        records = run_utilization_experiment([three_jobs()], ["S-FF"], workers=1)
        assert records[0].status == "solved"
        assert records[0].u_final == 1
        assert records[0].jobs_removed == 0

    def test_utilization_after_removal(self):
        """S-FF bakış örneğinde iş çıkardıkça çözer."""
        from lab.experiments import run_utilization_experiment
        record = run_utilization_experiment([look_ahead()], ["S-FF"], floor=Fraction(1, 2), workers=1)[0]
        assert record.status == "solved"
        assert record.jobs_removed >= 1
        assert Fraction(1, 2) <= record.u_final < 1

    def test_utilization_floor_failure(self):
        """İki iş de c > w: bir iş çıkarılınca U alt sınırın altına düşer."""
        from lab.experiments import run_utilization_experiment
        inst = make_instance([2, 8], [(1, 3, 8), (2, 3, 8)], name="wide")
        record = run_utilization_experiment([inst], ["S-FF"], floor=Fraction(7, 10), workers=1)[0]
        assert record.status == "failed"
        assert record.u_final == Fraction(3, 8)
        assert record.jobs_removed == 1

    def test_removal_candidate(self):
        """En küçük U_i; eşitlikte en küçük c; sonra en büyük kimlik."""
        from lab.experiments import removal_candidate
        inst = make_instance([2, 4], [(1, 1, 4), (2, 1, 4), (3, 2, 4)])
        assert removal_candidate(inst).id == 2
        inst = make_instance([2, 4], [(1, 1, 2), (2, 1, 4), (3, 2, 4)])
        assert removal_candidate(inst).id == 2

    def test_csv_round_trip(self, tmp_path):
        from lab.experiments import ExperimentRecord, read_records, write_records
        records = [
            ExperimentRecord("a", "S-FF", "solved", Fraction(7, 8), 2, 15),
            ExperimentRecord("b", "exact", "unknown", None, 0, 10000),
        ]
        path = write_records(tmp_path / "out" / "records.csv", records)
        assert path.read_text().splitlines()[0] == (
            "instance,method,status,u_final_num,u_final_den,jobs_removed,elapsed_ms"
        )
        assert read_records(path) == records

    def test_summarize(self):
        """Portföy U_F'si çözen üyelerin en büyüğü; başarısız U_F ortalamaya girmez."""
        from lab.experiments import ExperimentRecord, summarize_records
        records = [
            ExperimentRecord("a", "RG-FF-OPT", "solved", Fraction(1)),
            ExperimentRecord("a", "RG-FF-PES", "solved", Fraction(3, 4)),
            ExperimentRecord("b", "RG-FF-OPT", "solved", Fraction(1, 2)),
            ExperimentRecord("b", "RG-FF-PES", "failed", Fraction(3, 4)),
        ]
        rows = {row.method: row for row in summarize_records(records)}
        assert rows["RG-FF-OPT"].solved == 2
        assert rows["RG-FF-OPT"].avg_u_final == pytest.approx(0.75)
        assert rows["RG-FF-PES"].solved == 1
        assert rows["RG-FF-PES"].avg_u_final == pytest.approx(0.75)
        assert rows["M1"].solved == 2
        assert rows["M1"].avg_u_final == pytest.approx(0.75)
        assert "MA" not in rows

    def test_summarize_skips_failed_u_final(self):
        """Başarısız kayıtların alt sınır altı U_F'si ortalamayı düşürmez."""
        from lab.experiments import ExperimentRecord, summarize_records
        records = [
            ExperimentRecord("a", "S-FF", "solved", Fraction(9, 10), 1),
            ExperimentRecord("b", "S-FF", "failed", Fraction(3, 5), 4),
            ExperimentRecord("c", "S-FF", "solved", Fraction(1), 0),
            ExperimentRecord("a", "LPT", "failed", Fraction(13, 20), 5),
            ExperimentRecord("b", "LPT", "failed", Fraction(3, 5), 6),
        ]
        rows = {row.method: row for row in summarize_records(records, portfolios={"P": ("S-FF", "LPT")})}
        assert (rows["S-FF"].solved, rows["S-FF"].total) == (2, 3)
        assert rows["S-FF"].avg_u_final == pytest.approx(0.95)
        assert rows["LPT"].solved == 0
        assert rows["LPT"].avg_u_final is None
        assert rows["P"].solved == 2
        assert rows["P"].avg_u_final == pytest.approx(0.95)

    def test_process_pool(self):
        """workers > 1 aynı kayıtları aynı sırayla üretir."""
        from lab.experiments import run_success_experiment
        instances = [look_ahead(), three_jobs()]
        serial = run_success_experiment(instances, ["S-FF", "LPT"], workers=1)
        parallel = run_success_experiment(instances, ["S-FF", "LPT"], workers=2)
        assert [(r.instance, r.method, r.status) for r in serial.records] == [
            (r.instance, r.method, r.status) for r in parallel.records
        ]


# ============================================================
# Çizim
# ============================================================

class TestRender:
    def test_three_rects(self, tmp_path):
        from lab.render import render_packing
        packing = Packing({1: Placement(0, 0), 2: Placement(1, 0), 3: Placement(1, 1)})
        path = tmp_path / "p.svg"
        svg = render_packing(three_jobs(), packing, path=path)
        assert svg.startswith("<svg")
        for rect_id in (1, 2, 3):
            assert f'id="rect-{rect_id}"' in svg
        assert path.read_text(encoding="utf-8") == svg

    def test_empty_packing(self):
        from lab.render import render_packing
        svg = render_packing(make_instance([2, 4], []), Packing({}))
        assert "rect-" not in svg

    def test_deterministic(self):
        from lab.render import render_packing
        from heuristics.rgff import solve_rgff
        packing = solve_rgff(look_ahead()).packing
        assert render_packing(look_ahead(), packing) == render_packing(look_ahead(), packing)

    def test_invalid_packing(self):
        from domain.errors import InvalidPackingError
        from lab.render import render_packing
        overlapping = Packing({1: Placement(0, 0), 2: Placement(0, 0), 3: Placement(1, 1)})
        with pytest.raises(InvalidPackingError):
            render_packing(three_jobs(), overlapping)

    def test_partial_packing(self):
        """Yarım yerleşim doğrulamasız çizilir."""
        from lab.render import render_packing
        svg = render_packing(three_jobs(), Packing({1: Placement(0, 0)}), partial=True)
        assert 'id="rect-1"' in svg
        assert "rect-2" not in svg
