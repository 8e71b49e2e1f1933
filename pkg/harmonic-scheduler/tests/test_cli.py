"""
CLI Testleri - run.py Komutları ve Çıkış Kodları
Çalıştırma: cd harmonic-scheduler && python -m pytest tests/test_cli.py -v
"""

import json
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", ".."))

from run import EXIT_FAILED, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, main


def write_instance(path, periods, jobs, name=""):
    path.write_text(json.dumps({
        "name": name,
        "periods": periods,
        "jobs": [{"id": i, "period": t, "c": c} for i, c, t in jobs],
    }))
    return str(path)


@pytest.fixture
def three(tmp_path):
    return write_instance(tmp_path / "three.json", [2, 4], [(1, 1, 2), (2, 1, 4), (3, 1, 4)])


@pytest.fixture
def look_ahead(tmp_path):
    return write_instance(
        tmp_path / "look.json",
        [4, 8, 16],
        [(1, 1, 4), (2, 1, 8), (3, 1, 8), (4, 2, 16), (5, 2, 16), (6, 2, 16), (7, 2, 16)],
    )


class TestGenerateSolveValidate:
    def test_pipeline(self, tmp_path):
        """Üret → çöz → hakemle doğrula, hepsi 0."""
        inst = str(tmp_path / "s7.json")
        sched = str(tmp_path / "s7.schedule.json")
        svg = str(tmp_path / "s7.svg")
        assert main(["generate", "--scheme", "split", "--seed", "7", "--out", inst,
                     "--base-vector", "2,2,2"]) == EXIT_OK
        code = main(["solve", inst, "--method", "portfolio", "--schedule-out", sched, "--svg", svg])
        assert code in (EXIT_OK, EXIT_FAILED)
        if code == EXIT_OK:
            assert main(["validate", "--instance", inst, "--schedule", sched, "--oracle"]) == EXIT_OK
            assert os.path.exists(svg)

    def test_solve_worked_example(self, three, tmp_path):
        sched = tmp_path / "three.schedule.json"
        assert main(["solve", three, "--method", "sff", "--schedule-out", str(sched)]) == EXIT_OK
        assert json.loads(sched.read_text())["starts"] == {"1": 0, "2": 1, "3": 3}
        assert main(["validate", "--instance", three, "--schedule", str(sched)]) == EXIT_OK

    def test_generate_difficult_with_certificate(self, tmp_path):
        inst = str(tmp_path / "d.json")
        cert = str(tmp_path / "d.cert.json")
        assert main(["generate", "--scheme", "difficult", "--ratio", "2", "--levels", "3",
                     "--base-period", "60", "--out", inst, "--certificate", cert]) == EXIT_OK
        assert main(["validate", "--instance", inst, "--schedule", cert, "--oracle"]) == EXIT_OK

    def test_generate_modified(self, tmp_path):
        inst = tmp_path / "m.json"
        assert main(["generate", "--scheme", "modified", "--seed", "1", "--out", str(inst)]) == EXIT_OK
        assert json.loads(inst.read_text())["metadata"]["scheme"] == "modified"

    def test_heuristic_failure(self, look_ahead):
        assert main(["solve", look_ahead, "--method", "sff"]) == EXIT_FAILED

    def test_portfolio_by_list(self, look_ahead):
        assert main(["solve", look_ahead, "--method", "portfolio", "--portfolio", "sff,rgff-opt"]) == EXIT_OK

    def test_exact_infeasible(self, tmp_path):
        inst = write_instance(tmp_path / "over.json", [3, 6], [(1, 2, 3), (2, 1, 6), (3, 2, 6)])
        assert main(["solve", inst, "--method", "exact"]) == EXIT_FAILED

    def test_exact_unknown(self, look_ahead, monkeypatch):
        """Düğüm bütçesi bitince çıkış kodu 2."""
        monkeypatch.setenv("HSCHED_EXACT_NODE_LIMIT", "1")
        assert main(["solve", look_ahead, "--method", "exact"]) == EXIT_UNKNOWN

    def test_invalid_schedule(self, three, tmp_path):
        sched = tmp_path / "bad.json"
        sched.write_text(json.dumps({"starts": {"1": 0, "2": 1, "3": 2}}))
        assert main(["validate", "--instance", three, "--schedule", str(sched), "--oracle"]) == EXIT_FAILED

    def test_job_set_mismatch(self, three, tmp_path):
        sched = tmp_path / "short.json"
        sched.write_text(json.dumps({"starts": {"1": 0}}))
        assert main(["validate", "--instance", three, "--schedule", str(sched)]) == EXIT_FAILED


class TestUsageErrors:
    def test_malformed_json(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text('{"periods": [2, 4],\n "jobs": [}')
        assert main(["solve", str(path)]) == EXIT_USAGE
        assert "satır" in capsys.readouterr().err

    def test_non_harmonic(self, tmp_path):
        path = write_instance(tmp_path / "nh.json", [6, 10], [])
        assert main(["info", path]) == EXIT_USAGE

    def test_unknown_method(self, three):
        assert main(["solve", three, "--method", "magic"]) == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        assert main(["solve", str(tmp_path / "nope.json")]) == EXIT_USAGE

    def test_bad_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == EXIT_USAGE

    def test_bad_generator_config(self, tmp_path):
        out = str(tmp_path / "x.json")
        assert main(["generate", "--scheme", "difficult", "--levels", "1", "--out", out]) == EXIT_USAGE


class TestOtherCommands:
    def test_export_model(self, three, tmp_path):
        out = tmp_path / "model.txt"
        assert main(["export-model", three, str(out)]) == EXIT_OK
        assert out.read_text().startswith("HD2D w=2 H=2 heights=2,1\n")

    def test_render(self, three, tmp_path):
        sched = tmp_path / "s.json"
        sched.write_text(json.dumps({"starts": {"1": 0, "2": 1, "3": 3}}))
        out = tmp_path / "p.svg"
        assert main(["render", three, "--schedule", str(sched), "--out", str(out)]) == EXIT_OK
        assert 'id="rect-3"' in out.read_text()

    def test_render_invalid_schedule(self, three, tmp_path):
        sched = tmp_path / "s.json"
        sched.write_text(json.dumps({"starts": {"1": 0, "2": 1, "3": 2}}))
        out = str(tmp_path / "p.svg")
        assert main(["render", three, "--schedule", str(sched), "--out", out]) == EXIT_FAILED

    def test_info(self, three, capsys):
        assert main(["info", three]) == EXIT_OK
        assert "w = 2" in capsys.readouterr().out

    def test_experiment(self, three, look_ahead, tmp_path):
        out = tmp_path / "success.csv"
        pattern = str(tmp_path / "*.json")
        assert main(["experiment", "success", "--instances", pattern, "--methods", "sff,rgff-opt",
                     "--out", str(out), "--workers", "1"]) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0].startswith("instance,method,status")
        assert len(lines) == 1 + 2 * 2

    def test_utilization_experiment(self, look_ahead, tmp_path):
        out = tmp_path / "util.csv"
        assert main(["experiment", "utilization", "--instances", look_ahead, "--methods", "sff",
                     "--out", str(out), "--floor", "1/2", "--workers", "1"]) == EXIT_OK
        assert ",sff," not in out.read_text()
        assert ",S-FF,solved," in out.read_text()

    def test_experiment_without_matches(self, tmp_path):
        pattern = str(tmp_path / "none-*.json")
        assert main(["experiment", "success", "--instances", pattern, "--methods", "sff",
                     "--out", str(tmp_path / "o.csv")]) == EXIT_USAGE
