import json

import pytest

from unruh_ent.cli import main
from unruh_ent.sweep import COLUMNS, records_from_csv


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_sweep_csv_stdout(capsys):
    code, out, _ = run(capsys, "sweep", "--scenario", "one", "--grid", "3")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == ",".join(COLUMNS)
    assert len(lines) == 4


def test_sweep_json_to_file(tmp_path, capsys):
    path = tmp_path / "out.json"
    code, out, _ = run(capsys, "sweep", "--scenario", "two", "--grid", "3", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    data = json.loads(path.read_text())
    assert len(data) == 3 and data[-1]["q_tri_bc"] == pytest.approx(0.25)


def test_sweep_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert run(capsys, "sweep", "--scenario", "two", "--grid", "9", "--out", str(p))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_custom_out_of_range_is_config_error(capsys):
    code, _, err = run(capsys, "sweep", "--scenario", "custom", "--rb", "0.3", "--rc", "0.9")
    assert code == 1
    assert "rc" in err


def test_custom_in_range(capsys):
    code, out, _ = run(capsys, "sweep", "--scenario", "custom", "--rb", "0.3", "--rc", "0.7")
    assert code == 0
    (rec,) = records_from_csv(out)
    assert rec.rb == 0.3 and rec.rc == 0.7


def test_usage_error_exit_code(capsys):
    code, _, err = run(capsys, "sweep", "--grid", "lots")
    assert code == 1
    code, _, _ = run(capsys, "frobnicate")
    assert code == 1


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"scenario": "two", "grid": 4}))
    code, out, _ = run(capsys, "sweep", "--config", str(cfg))
    assert code == 0 and len(out.strip().split("\n")) == 5
    code, out, _ = run(capsys, "sweep", "--config", str(cfg), "--grid", "2")
    assert len(out.strip().split("\n")) == 3
    rec = records_from_csv(out)[-1]
    assert rec.rb == rec.rc  # scenario still comes from the file


def test_config_file_diagnostics(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text('{\n  "scenario": "one",\n  "grid": 1\n}\n')
    code, _, err = run(capsys, "sweep", "--config", str(cfg))
    assert code == 1 and "line 3" in err and "grid" in err

    cfg.write_text('{\n  "scenario": "one",\n  "colour": 1\n}\n')
    code, _, err = run(capsys, "sweep", "--config", str(cfg))
    assert code == 1 and "line 3" in err and "colour" in err

    cfg.write_text('{\n  "scenario": "one",,\n}\n')
    code, _, err = run(capsys, "sweep", "--config", str(cfg))
    assert code == 1 and "line 2" in err


def test_report_text(capsys):
    code, out, _ = run(capsys, "report", "--scenario", "one", "--grid", "21")
    assert code == 0  # DISCREPANT rows do not change the exit code
    assert "eq10" in out and "DISCREPANT" in out


def test_report_from_file_json(tmp_path, capsys):
    path = tmp_path / "sweep.csv"
    run(capsys, "sweep", "--scenario", "two", "--grid", "5", "--out", str(path))
    code, out, _ = run(capsys, "report", "--input", str(path), "--format", "json")
    assert code == 0
    rows = {r["form"]: r for r in json.loads(out)}
    assert rows["eq15"]["status"] == "DISCREPANT"


def test_report_without_closed_forms(capsys):
    code, _, err = run(capsys, "report", "--scenario", "custom", "--rb", "0.1", "--rc", "0.2")
    assert code == 1 and "closed-form" in err


def test_numeric_failure_exit_code(capsys, monkeypatch):
    from unruh_ent import sweep
    from unruh_ent.errors import ConvergenceFailure

    def boom(*args, **kwargs):
        raise ConvergenceFailure("forced")

    monkeypatch.setattr(sweep, "evaluate_point", boom)
    code, _, err = run(capsys, "sweep", "--grid", "2")
    assert code == 2 and "forced" in err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "3", "--count", "20")
    assert code == 0
    assert out.count("PASS") == 4
