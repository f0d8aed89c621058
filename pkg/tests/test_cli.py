import json
import os
import subprocess
import sys

import pytest

from nibble.cli import main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_tamari(capsys):
    code, out, _ = run_cli(["count", "--family", "tamari", "--n", "4"], capsys)
    assert code == 0 and out.strip() == "4"


def test_count_rectangle(capsys):
    code, out, _ = run_cli(
        ["count", "--family", "rectangle", "--a", "2", "--b", "2"], capsys
    )
    assert code == 0 and out.strip() == "4"


def test_count_weak_json(capsys):
    code, out, _ = run_cli(
        ["count", "--family", "weak", "--n", "5", "--json"], capsys
    )
    assert code == 0
    assert json.loads(out) == {"schema_version": 1, "family": "weak", "count": 29}


def test_count_skew(capsys):
    code, out, _ = run_cli(
        ["count", "--family", "skew", "--lam", "2,2"], capsys
    )
    assert code == 0 and out.strip() == "4"


def test_series_typea(capsys):
    code, out, _ = run_cli(["series", "--which", "typea", "--order", "6"], capsys)
    assert code == 0
    assert json.loads(out) == ["0", "1", "2", "4", "10", "24", "62"]


def test_series_tamari(capsys):
    code, out, _ = run_cli(["series", "--which", "tamari", "--order", "5"], capsys)
    assert json.loads(out) == ["0", "1", "1", "2", "4", "9"]


def test_solve_lattice_file(tmp_path, capsys):
    path = tmp_path / "diamond.json"
    path.write_text(json.dumps({"n": 4, "covers": [[0, 1], [0, 2], [1, 3], [2, 3]]}))
    code, out, _ = run_cli(["solve-lattice", str(path), "--json"], capsys)
    assert code == 0
    body = json.loads(out)
    assert body["top_label"] == "Atniss"
    assert body["labels"][0] == "Eeta"
    assert body["eeta_count"] == 1


def test_solve_lattice_missing_file(capsys):
    code, _, err = run_cli(["solve-lattice", "/nonexistent/lattice.json"], capsys)
    assert code == 2
    assert "error" in err


def test_compile_formula_json(tmp_path, capsys):
    emit = tmp_path / "lat.json"
    code, out, _ = run_cli(
        [
            "compile-formula",
            "--formula",
            "(x|y)",
            "--assign",
            "x=1,y=0",
            "--emit",
            str(emit),
            "--json",
        ],
        capsys,
    )
    assert code == 0
    body = json.loads(out)
    assert body["equivalent"] is True
    assert body["lattice_size"] == 10
    emitted = json.loads(emit.read_text())
    assert emitted["n"] == 10


def test_compile_formula_syntax_error(capsys):
    code, _, err = run_cli(["compile-formula", "--formula", "(x|"], capsys)
    assert code == 2
    assert "offset" in err


def test_conjecture_yf(capsys):
    code, out, _ = run_cli(
        ["conjecture", "--which", "yf", "--max-rank", "6", "--json"], capsys
    )
    assert code == 0
    reports = json.loads(out)
    assert all(r["match"] for r in reports)
    assert reports[0] == {"computed": 2, "match": True, "n": 2, "predicted": 2}


def test_conjecture_ss(capsys):
    code, out, _ = run_cli(["conjecture", "--which", "ss", "--n", "6", "--json"], capsys)
    reports = json.loads(out)
    assert len(reports) == 6 and all(r["match"] for r in reports)


def test_verify_quick_suite(capsys):
    code, out, _ = run_cli(["verify", "--suite", "rectangle", "--quick"], capsys)
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_exit_code_is_one_on_failure(monkeypatch, capsys):
    import nibble.verify as verify_mod

    def broken_suite(quick=False):
        return [{"name": "x", "passed": False, "detail": "boom", "seconds": 0.0}]

    monkeypatch.setitem(verify_mod.SUITES, "rectangle", broken_suite)
    code, out, err = run_cli(["verify", "--suite", "rectangle"], capsys)
    assert code == 1
    assert "FAILED" in err


def test_usage_error_exits_two():
    proc = subprocess.run(
        [sys.executable, "-m", "nibble.cli", "count", "--family", "bogus"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_outputs_byte_stable(capsys):
    first = run_cli(["series", "--which", "typea", "--order", "10"], capsys)
    second = run_cli(["series", "--which", "typea", "--order", "10"], capsys)
    assert first == second


def test_report_writes_csv_and_figures(tmp_path, capsys):
    out_dir = tmp_path / "rep"
    code, out, _ = run_cli(
        ["report", "--out", str(out_dir), "--order", "60"], capsys
    )
    assert code == 0
    names = sorted(os.listdir(out_dir))
    assert "weak_order.csv" in names
    assert "weak_ratio.png" in names
    assert "tamari_series.csv" in names
    assert "tamari_growth.png" in names
    assert "typea_series.csv" in names
    assert "typea_growth.png" in names
    assert "conjectures.csv" in names
    assert "radical_report.json" in names
    header = (out_dir / "weak_order.csv").read_text().splitlines()[0]
    assert header == "n,factorial,eeta_wins,ratio"
    assert (out_dir / "weak_ratio.png").stat().st_size > 1000
