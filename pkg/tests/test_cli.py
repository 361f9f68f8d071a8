import json

import pytest

from polysym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hilbert_secondary(capsys):
    code, out, _ = run(capsys, "hilbert", "secondary", "--m", "2", "--truncate", "6")
    assert code == 0
    assert out.splitlines()[0] == "1 + tu + t^2u + tu^2 + t^2u^2 + t^3u^3"


def test_minimality_m2(capsys):
    code, out, _ = run(capsys, "minimality", "check", "--m", "2")
    assert code == 0
    assert "generator set: 5 elements" in out
    assert "beta(3,2) = 6" in out


def test_json_schema_and_global_options_after_command(capsys):
    code, out, _ = run(capsys, "verify", "j32", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == "polysym-report/1" and doc["ok"]


def test_global_option_before_command(capsys):
    code, out, _ = run(capsys, "--format", "json", "decompose", "kernel", "--m", "2", "--degree", "5")
    assert json.loads(out)["result"]["decomposition"] == [{"partition": [3, 2], "mult": 1}]


def test_verify_psi_counts(capsys):
    code, out, _ = run(capsys, "verify", "psi", "--n", "3", "--m", "2", "--max-degree", "6")
    assert code == 0 and "51 tuples checked, 0 failures" in out


@pytest.mark.parametrize("argv", [
    ["decompose", "kernel", "--m", "7"],
    ["lowerbound", "--n", "9"],
    ["hilbert", "secondary", "--truncate", "13"],
    ["tables", "verify", "--id", "7"],
    ["frobnicate"],
    ["hwv", "--m", "2"],
])
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_failed_check_exits_1(capsys):
    code, out, _ = run(capsys, "hwv", "--expr", "t(y)", "--m", "2")
    assert code == 1 and out.rstrip().endswith("FAIL")


def test_aliases_in_expressions(capsys):
    code, out, _ = run(capsys, "hwv", "--expr", "t(x^2)t(y) - t(x^2y)", "--m", "2")
    assert "weight (2, 1)" in out


def test_reports_are_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["tables", "verify", "--id", "2", "--format", "json", "--jobs", "2",
                     "--output", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_tsv_table(capsys):
    code, out, _ = run(capsys, "tables", "verify", "--id", "4", "--format", "tsv")
    rows = out.strip().split("\n")
    assert code == 0 and len(rows) == 6 and rows[0].startswith("multidegree\t")


def test_hilbert_rejects_other_n(capsys):
    assert main(["hilbert", "hironaka-check", "--n", "4"]) == 2
