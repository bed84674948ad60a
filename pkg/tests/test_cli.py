"""Command-line interface: argument handling, report files, exit codes."""

import csv
import json

import pytest

from hartogs import cli
from hartogs.checks import CheckRow
from hartogs.cli import _parse_floats, build_parser, main
from hartogs.reports import CSV_COLUMNS

FAST = [
    "--pairs", "50", "--curve-samples", "32", "--polar-pairs", "1000",
    "--level", "8", "--seed", "3",
]


def run_uniform(tmp_path, extra=(), fmt="json"):
    tmp_path.mkdir(parents=True, exist_ok=True)
    out = tmp_path / f"report.{fmt}"
    code = main(["uniform", "--domain", "T", *FAST, *extra,
                 "--out", str(out), "--format", fmt])
    return code, out


def test_uniform_json_run(tmp_path, capsys):
    code, out = run_uniform(tmp_path)
    assert code == 0
    payload = json.loads(out.read_text())
    assert set(payload) == {"command", "config", "generated_at", "all_passed", "checks"}
    assert payload["command"] == "uniform"
    assert payload["all_passed"] is True
    assert all(row["passed"] for row in payload["checks"])
    text = capsys.readouterr().out
    assert "PASS" in text
    assert "checks passed" in text


def test_csv_report_columns(tmp_path):
    code, out = run_uniform(tmp_path, fmt="csv")
    assert code == 0
    with out.open() as fh:
        rows = list(csv.reader(fh))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) > 1
    for row in rows[1:]:
        assert row[-1] in ("true", "false")


def test_csv_runs_are_byte_identical(tmp_path):
    _, out1 = run_uniform(tmp_path / "a", fmt="csv")
    _, out2 = run_uniform(tmp_path / "b", fmt="csv")
    assert out1.read_bytes() == out2.read_bytes()


def test_json_runs_identical_modulo_timestamp(tmp_path):
    _, out1 = run_uniform(tmp_path / "a")
    _, out2 = run_uniform(tmp_path / "b")
    p1 = json.loads(out1.read_text())
    p2 = json.loads(out2.read_text())
    p1.pop("generated_at")
    p2.pop("generated_at")
    assert p1 == p2


def test_missing_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args([])
    assert exc.value.code == 2


def test_unknown_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["uniform", "--no-such-flag", "1"])
    assert exc.value.code == 2


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["frobnicate"])
    assert exc.value.code == 2


def test_unwritable_output_exits_2(tmp_path, capsys):
    code = main(["uniform", "--domain", "T", *FAST,
                 "--out", str(tmp_path / "missing_dir" / "r.json")])
    assert code == 2
    assert "error" in capsys.readouterr().err.lower()


def test_bad_config_json_exits_2(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text("{not json")
    code = main(["uniform", "--config", str(cfg)])
    assert code == 2


def test_config_unknown_key_exits_2(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"pairs": 50, "bogus_option": 1}))
    code = main(["uniform", "--config", str(cfg)])
    assert code == 2


def test_config_must_be_object(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps([1, 2, 3]))
    code = main(["uniform", "--config", str(cfg)])
    assert code == 2


def test_missing_config_file_exits_2(tmp_path):
    code = main(["uniform", "--config", str(tmp_path / "nope.json")])
    assert code == 2


def test_config_supplies_parameters(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({
        "domain": "T", "pairs": 50, "curve_samples": 32,
        "polar_pairs": 1000, "level": 8, "seed": 3,
        "out": str(tmp_path / "from_cfg.json"),
    }))
    code = main(["uniform", "--config", str(cfg)])
    assert code == 0
    payload = json.loads((tmp_path / "from_cfg.json").read_text())
    assert payload["config"]["pairs"] == 50


def test_flag_overrides_config(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"domain": "T", "pairs": 50, "curve_samples": 32,
                               "polar_pairs": 1000, "level": 8, "seed": 3}))
    out = tmp_path / "r.json"
    code = main(["uniform", "--config", str(cfg), "--pairs", "75",
                 "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["config"]["pairs"] == 75


def test_failing_check_exits_1(tmp_path, monkeypatch, capsys):
    def fake_run(command, params):
        return [CheckRow(
            check_id="uniform.cone.length",
            claim="synthetic failure",
            parameter_json="{}",
            observed=99.0,
            expected=12.0,
            tolerance=0.0,
            passed=False,
        )]

    monkeypatch.setattr(cli, "run_command", fake_run)
    code = main(["uniform", "--out", str(tmp_path / "r.json")])
    assert code == 1
    text = capsys.readouterr().out
    assert "FAIL" in text
    assert "0/1 checks passed" in text


def test_deltas_flag_parses_tuple(tmp_path):
    out = tmp_path / "r.json"
    code = main(["dbar", "--deltas", "0.5,0.25", "--jmax", "1",
                 "--shell-level", "48", "--level", "8", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["config"]["deltas"] == [0.5, 0.25]


def test_parse_floats():
    assert _parse_floats("0.5,0.1") == (0.5, 0.1)
    assert _parse_floats(" 1 , 2 ") == (1.0, 2.0)
    with pytest.raises(ValueError):
        _parse_floats("")
    with pytest.raises(ValueError):
        _parse_floats("a,b")


def test_default_output_name(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code = main(["uniform", "--domain", "T", *FAST])
    assert code == 0
    assert (tmp_path / "hartogs_report.json").exists()
