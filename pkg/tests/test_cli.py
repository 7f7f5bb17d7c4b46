import json

import pytest

from vertexlab.cli import RunConfig, main
from vertexlab.output import series_from_dict


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_symmetry_json(capsys):
    code, out, _ = run(capsys, "verify", "symmetry", "--zorder", "2", "--yorder", "2")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert report["orders"] == {"zorder": 2, "yorder": 2}
    assert report["schema"] == "vertexlab.report/1"


def test_verify_nekrasov(capsys):
    assert run(capsys, "verify", "nekrasov", "--order", "4")[0] == 0


def test_dt_limit_csv(capsys):
    code, out, _ = run(capsys, "dt-limit", "--geometry", "x1", "--regime", "A",
                       "--kahler-degree", "2", "--qt-order", "6", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "monomial,coefficient"
    assert lines[1] == "1,1"
    assert len(lines) > 10


def test_dt_limit_routes_agree(capsys):
    args = ["dt-limit", "--geometry", "x2", "--regime", "B", "--kahler-degree", "2", "--format", "csv"]
    _, vertex_sum, _ = run(capsys, *args)
    _, closed, _ = run(capsys, *args, "--route", "closed")
    assert vertex_sum == closed


def test_f_series_round_trips(capsys, tmp_path):
    path = tmp_path / "f.json"
    code, out, _ = run(capsys, "f-series", "--zorder", "2", "--yorder", "1", "--out", str(path))
    assert code == 0 and out == ""
    s = series_from_dict(json.loads(path.read_text()))
    assert s.coeffs


def test_taut_chi_plain(capsys):
    code, out, _ = run(capsys, "taut", "chi", "--surface", "P2", "--degree", "1",
                       "--zorder", "2", "--korder", "1", "--format", "plain")
    assert code == 0
    rows = dict(line.split() for line in out.splitlines()[1:])
    assert rows["z*m"] == "-3"


def test_failed_check_exits_one_with_witness(capsys):
    code, out, _ = run(capsys, "verify", "slope-independence", "--geometry", "x2",
                       "--corrupt-row", "zero-minus-two", "--qt-order", "4")
    assert code == 1
    report = json.loads(out)
    assert report["status"] == "fail"
    assert report["witness"]


def test_failed_check_to_file_prints_witness_on_stderr(capsys, tmp_path):
    code, _, err = run(capsys, "verify", "denominator", "--zorder", "2", "--corrupt",
                       "--out", str(tmp_path / "r.json"))
    assert code == 1
    assert "witness" in err


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["verify", "nekrasov", "--order", "-1"],
    ["verify", "nekrasov", "--unknown"],
    ["verify", "nekrasov", "4"],
    ["dt-limit", "--geometry", "x3", "--regime", "A"],
    ["dt-limit", "--geometry", "x1", "--regime", "C"],
    ["verify", "symmetry", "--format", "xml"],
    ["taut", "chi", "--surface", "P2", "--degree", "1,2"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_jobs_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("VERTEXLAB_JOBS", "2")
    code, out, _ = run(capsys, "verify", "vertex", "--max-leg", "1", "--order", "1")
    assert code == 0
    monkeypatch.setenv("VERTEXLAB_JOBS", "zero")
    assert run(capsys, "verify", "vertex", "--max-leg", "0")[0] == 2


def test_other_verifications(capsys):
    for argv in (["verify", "pipeline", "--order", "1"],
                 ["verify", "edge-tables", "--max-size", "2"],
                 ["verify", "rigidity", "--max-size", "2", "--slopes", "3"],
                 ["verify", "identities", "--order", "3"],
                 ["verify", "taut", "--n", "2", "--rank2-n", "1", "--cobordism-order", "1"]):
        assert run(capsys, *argv)[0] == 0, argv


def test_run_config_validation():
    import click
    with pytest.raises(click.UsageError):
        RunConfig("x", {"order": -1})
    with pytest.raises(click.UsageError):
        RunConfig("x", regime="Z")
    assert RunConfig("x", {"order": 1}, regime="A").meta()["regime"] == "A"
