import json

import pytest

from engine.theorem import classify
from models.output_record import OutputRecord
from sgtool import EXIT_FAILED, EXIT_IO, EXIT_OK, EXIT_USAGE, GrundyTool
from utils.records import read_records

SIEVE_TO_4 = (
    "x,grundy,class,z1,z2\n"
    "0,0,T,0,0\n"
    "1,1,B1,2,0\n"
    "2,0,B,3,0\n"
    "3,1,B1,4,0\n"
    "4,2,AB1,2,4\n"
)


def test_sieve_csv(run_tool):
    assert run_tool("sieve", "--max", "4") == (EXIT_OK, SIEVE_TO_4)


def test_sieve_single_position(run_tool):
    code, out = run_tool("sieve", "--max", "0", "--format", "csv")
    assert code == EXIT_OK
    assert out.splitlines() == ["x,grundy,class,z1,z2", "0,0,T,0,0"]


def test_sieve_json(run_tool):
    code, out = run_tool("sieve", "--max", "17", "--format", "json")
    records = json.loads(out)
    assert code == EXIT_OK
    assert len(records) == 18
    assert records[-1] == {"x": 17, "grundy": 2, "class": "AB1", "z1": 2, "z2": 4}


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_sieve_file_round_trip(run_tool, tmp_path, fmt):
    path = tmp_path / f"table.{fmt}"
    code, out = run_tool("sieve", "--max", "500", "--format", fmt, "--out", str(path))
    assert (code, out) == (EXIT_OK, "")
    with open(path, encoding="utf-8", newline="") as stream:
        records = read_records(stream, fmt)
    assert [record.x for record in records] == list(range(501))
    for record in records:
        assert record.position_class is classify(record.x)
        assert record.grundy == record.position_class.grundy


def test_sieve_io_error(run_tool, tmp_path):
    code, _ = run_tool("sieve", "--max", "10", "--out", str(tmp_path / "missing" / "table.csv"))
    assert code == EXIT_IO


def test_classify_positions(run_tool):
    code, out = run_tool("classify", "12", "0", "1000000000000")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert lines[1] == "12,2,AB1,2,4"
    assert lines[2] == "0,0,T,0,0"
    assert lines[3].startswith("1000000000000,")


def test_classify_matches_sieve(run_tool):
    _, sieve_out = run_tool("sieve", "--max", "200")
    _, classify_out = run_tool("classify", *[str(x) for x in range(201)])
    assert classify_out == sieve_out


@pytest.mark.parametrize("raw", ["abc", "-3", str(2 ** 63)])
def test_classify_rejects_bad_positions(run_tool, raw):
    assert run_tool("classify", raw)[0] == EXIT_USAGE


def test_unknown_command_is_a_usage_error(run_tool):
    assert run_tool("frobnicate")[0] == EXIT_USAGE
    assert run_tool("sieve", "--max", "ten")[0] == EXIT_USAGE


def test_verify_summary(run_tool):
    code, out = run_tool("verify", "--max", "10000")
    assert code == EXIT_OK
    assert out.startswith("PASS, 0 mismatches")


def test_verify_json_report(run_tool):
    code, out = run_tool("verify", "--max", "1000", "--format", "json")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["command"] == "verify"
    assert report["range"] == [0, 1000]
    assert report["passed"] is True
    assert "counterexample" not in report
    assert sum(report["counts"].values()) == 1001
    assert report["elapsed_ms"] >= 0


def test_report_written_to_file(run_tool, tmp_path):
    path = tmp_path / "report.json"
    code, out = run_tool("partition", "--max", "18", "--out", str(path))
    assert code == EXIT_OK
    assert "counts 7/7/4" in out
    report = json.loads(path.read_text(encoding="utf-8"))
    assert report["counts"] == {"T": 0, "B": 7, "B1": 7, "AB1": 4}


def test_partition_summary(run_tool):
    code, out = run_tool("partition", "--max", "18")
    assert code == EXIT_OK
    assert out.startswith("PASS")
    assert "counts 7/7/4" in out


def test_partition_needs_positive_range(run_tool):
    assert run_tool("partition", "--max", "0")[0] == EXIT_USAGE


def test_group_summary(run_tool):
    assert run_tool("group", "--max", "100") == (EXIT_OK, "values {0,1,2}, closure {0,1,2,3}, order 4\n")


def test_period_not_found(run_tool):
    code, out = run_tool("period", "--max", "20000", "--max-period", "100", "--max-preperiod", "1000")
    assert code == EXIT_OK
    assert out.startswith("PASS, no period")


@pytest.mark.parametrize("argv", [
    ("period", "--max", "2000", "--max-period", "50", "--max-preperiod", "500"),
    ("group", "--max", "2000"),
])
def test_period_and_group_json_reports(run_tool, argv):
    code, out = run_tool(*argv, "--format", "json")
    report = json.loads(out)
    assert code == EXIT_OK
    assert {"command", "range", "passed", "counts", "elapsed_ms"} <= set(report)
    assert report["command"] == argv[0]
    assert report["range"] == [0, 2000]
    assert report["passed"] is True
    assert sum(report["counts"].values()) == 2001
    assert report["counts"]["T"] == 1
    assert report["elapsed_ms"] >= 0


def test_period_window_too_small(run_tool):
    assert run_tool("period", "--max", "100", "--max-period", "60", "--max-preperiod", "10")[0] == EXIT_USAGE


@pytest.mark.parametrize("command", ["followers", "word"])
def test_supplementary_verifiers(run_tool, command):
    code, out = run_tool(command, "--max", "5000")
    assert code == EXIT_OK
    assert out.startswith("PASS, 0 mismatches")


def test_bench(run_tool):
    code, out = run_tool("bench", "--max", "1000")
    assert code == EXIT_OK
    assert out.count("positions/s") == 2


def test_max_defaults_from_environment(run_tool, monkeypatch):
    monkeypatch.setenv("SGTOOL_MAX", "18")
    code, out = run_tool("partition")
    assert code == EXIT_OK
    assert "on [1, 18]" in out


def test_bad_configuration_is_rejected(monkeypatch):
    monkeypatch.setenv("SGTOOL_WORKERS", "many")
    with pytest.raises(ValueError):
        GrundyTool()


def test_failed_checks_use_exit_code_three():
    assert EXIT_FAILED == 3


def test_output_record_consistency():
    with pytest.raises(ValueError):
        OutputRecord.from_mapping({"x": 4, "grundy": 1, "class": "AB1", "z1": 2, "z2": 4})
