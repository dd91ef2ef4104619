import csv
import io
import math

import pytest

from infobound import cli
from infobound.report import (
    COLUMNS,
    BoundReport,
    BoundRow,
    build_report,
    parse_range,
    sig7,
)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def fields(out):
    return dict(line.split(": ", 1) for line in out.splitlines() if ": " in line)


def test_bound_max(capsys):
    code, out, _ = run(capsys, "bound", "--problem", "max", "--n", "10")
    f = fields(out)
    assert code == 0
    assert (f["state_count"], f["entropy_exact_bits"], f["ceil_entropy"]) == ("512", "9", "9")


def test_bound_sort(capsys):
    code, out, _ = run(capsys, "bound", "--problem", "sort", "--n", "1")
    assert code == 0 and fields(out)["entropy_exact_bits"] == "0"
    code, out, _ = run(capsys, "bound", "--problem", "sort", "--n", "5")
    f = fields(out)
    assert float(f["entropy_exact_bits"]) == pytest.approx(6.9069, abs=1e-4)
    assert f["ceil_entropy"] == "7"
    assert float(f["entropy_stirling_bits"]) < float(f["entropy_exact_bits"])


def test_bound_stirling_mode(capsys):
    code, out, _ = run(capsys, "bound", "--problem", "sort", "--n", "100", "--mode", "stirling")
    assert code == 0 and float(fields(out)["bound_bits"]) == pytest.approx(520.1, abs=0.05)
    code, _, err = run(capsys, "bound", "--problem", "max", "--n", "4", "--mode", "stirling")
    assert code == 2 and "--mode" in err


@pytest.mark.parametrize("argv, flag", [
    (["bound", "--problem", "sort", "--n", "0"], "--n"),
    (["bound", "--problem", "heap", "--n", "3"], "--problem"),
    (["measure", "--algo", "quick", "--n", "3"], "--algo"),
    (["report", "--n-range", "5..2"], "--n-range"),
    (["report", "--n-range", "3"], "--n-range"),
])
def test_usage_errors_name_the_flag(capsys, argv, flag):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    err = capsys.readouterr().err
    assert code == 2
    assert flag in err


def test_enumerate_pairwise_three(capsys):
    code, out, _ = run(capsys, "enumerate", "--model", "pairwise", "--n", "3")
    assert code == 0
    assert fields(out) == {"total": "8", "consistent": "6", "inconsistent": "2"}


def test_enumerate_listing(capsys):
    code, out, _ = run(capsys, "enumerate", "--model", "pairwise", "--n", "3", "--list")
    listed = [ln for ln in out.splitlines() if ln.startswith("3 pairwise")]
    assert len(listed) == 8
    assert listed[0] == "3 pairwise 000 consistent"
    assert sorted(ln for ln in listed if ln.endswith(" inconsistent")) == [
        "3 pairwise 010 inconsistent", "3 pairwise 101 inconsistent"]


def test_enumerate_other_models(capsys):
    assert fields(run(capsys, "enumerate", "--model", "maxkeys", "--n", "2")[1])["total"] == "2"
    f = fields(run(capsys, "enumerate", "--model", "pairwise", "--n", "4")[1])
    assert (f["total"], f["consistent"]) == ("64", "24")


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--model", "pairwise", "--n", "7")
    assert code == 2 and "6" in err


def test_measure(capsys):
    code, out, _ = run(capsys, "measure", "--algo", "max_scan", "--n", "6", "--mode", "exhaustive")
    assert code == 0 and fields(out)["worst_case"] == "5"
    assert fields(run(capsys, "measure", "--algo", "insertion", "--n", "2")[1])["worst_case"] == "1"
    worst = int(fields(run(capsys, "measure", "--algo", "merge", "--n", "6")[1])["worst_case"])
    assert worst >= math.ceil(math.log2(720)) == 10


def test_measure_sampled(capsys):
    code, _, err = run(capsys, "measure", "--algo", "merge", "--n", "12", "--mode", "sampled")
    assert code == 2 and "--seed" in err
    argv = ("measure", "--algo", "merge", "--n", "12", "--mode", "sampled",
            "--trials", "50", "--seed", "11")
    first, second = run(capsys, *argv), run(capsys, *argv)
    assert first == second and fields(first[1])["seed"] == "11"


def test_measure_cap(capsys):
    code, _, err = run(capsys, "measure", "--algo", "merge", "--n", "9")
    assert code == 2 and "8" in err


def test_oracle_cmd(capsys):
    f = fields(run(capsys, "oracle", "--problem", "sort", "--n", "3")[1])
    assert (f["min_worst_case"], f["entropy_floor"], f["bound_met"]) == ("3", "3", "met")
    assert fields(run(capsys, "oracle", "--problem", "max", "--n", "2")[1])["min_worst_case"] == "1"
    f = fields(run(capsys, "oracle", "--problem", "sort", "--n", "4")[1])
    assert (f["min_worst_case"], f["entropy_floor"], f["bound_met"]) == ("5", "5", "met")
    code, out, _ = run(capsys, "oracle", "--problem", "max", "--n", "2", "--tree")
    assert out.endswith("cmp 0 1\n  max: 0\n  max: 1\n")
    assert run(capsys, "oracle", "--problem", "sort", "--n", "6")[0] == 2


def test_report_rows(capsys):
    code, out, _ = run(capsys, "report", "--n-range", "2..5")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [(r["problem"], int(r["n"])) for r in rows] == sorted(
        (p, n) for p in ("max", "sort") for n in range(2, 6))
    sort_rows = [r for r in rows if r["problem"] == "sort"]
    assert all(r["bound_met"] == "true" for r in sort_rows)
    n4 = next(r for r in sort_rows if r["n"] == "4")
    assert float(n4["entropy_exact_bits"]) == pytest.approx(4.5849625, abs=1e-6)
    assert n4["state_count"] == "24" and n4["oracle_min"] == "5"


def test_report_single_n(capsys):
    out = run(capsys, "report", "--n-range", "2..2")[1]
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["problem"] for r in rows] == ["max", "sort"]


def test_report_header_and_blanks():
    text = build_report(5, 9).to_csv()
    assert text.splitlines()[0] == ",".join(COLUMNS)
    rows = {(r["problem"], r["n"]): r for r in csv.DictReader(io.StringIO(text))}
    assert rows["sort", "6"]["oracle_min"] == "" and rows["sort", "6"]["bound_met"] == ""
    assert rows["sort", "8"]["worst_case"] != ""
    assert rows["sort", "9"]["worst_case"] == "" and rows["sort", "9"]["algo"] == ""
    assert rows["max", "9"]["entropy_stirling_bits"] == ""


def test_csv_round_trip():
    report = build_report(1, 9)
    assert BoundReport.from_csv(report.to_csv()) == report


def test_markdown_table(tmp_path, capsys):
    path = tmp_path / "r.md"
    assert run(capsys, "report", "--n-range", "2..3", "--format", "md", "--out", str(path))[0] == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "| " + " | ".join(COLUMNS) + " |"
    assert set(lines[1]) <= set("|-")
    assert len(lines) == 2 + 4
    assert all(ln.count("|") == len(COLUMNS) + 1 for ln in lines)


def test_report_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "report", "--n-range", "2..5", "--out", str(a))
    run(capsys, "report", "--n-range", "2..5", "--out", str(b), "--workers", "2")
    assert a.read_bytes() == b.read_bytes()


def test_report_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "report", "--n-range", "2..3", "--out",
                       str(tmp_path / "missing" / "r.csv"))
    assert code == 1 and "cannot write" in err


def test_report_self_check(capsys, monkeypatch):
    good = build_report(3, 3)
    bad = BoundRow("sort", 3, 6, 2.584963, 0.4268024, 3, 3, ("fake",), (2,), True)
    monkeypatch.setattr(cli, "build_report", lambda lo, hi, workers=1: BoundReport(good.rows + (bad,)))
    code, _, err = run(capsys, "report", "--n-range", "3..3")
    assert code == 3
    assert "fake worst case 2 below lower bound 3" in err


def test_violation_messages():
    row = BoundRow("sort", 4, 24, 4.584963, 2.22922, 5, 4, ("merge",), (5,), False)
    assert row.violations() == ["sort n=4: ceil_entropy 5 > oracle_min 4"]
    assert build_report(1, 8).violations() == []


def test_parse_range():
    assert parse_range("2..5") == (2, 5)
    assert parse_range("4..4") == (4, 4)
    for bad in ("5..2", "0..3", "2-5", "a..b"):
        with pytest.raises(ValueError):
            parse_range(bad)


def test_sig7():
    assert sig7(4.584962500721156) == 4.584963
    assert f"{sig7(-0.885390081777927):.7g}" == "-0.8853901"
