import csv
import io
import json
import pathlib
import subprocess
import sys

import pytest

from frobtriples import cli
from frobtriples.sweep import CSV_COLUMNS

GOLDEN = pathlib.Path(__file__).parent / "golden" / "sweep_header.csv"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestTriple:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "triple", "--s", "9", "--t", "4", "--r", "3")
        data = json.loads(out)
        assert code == 0
        assert (data["x"], data["y"], data["z"]) == (297, 908, 97)
        assert data["ordering"] == "z<x<y"

    def test_text(self, capsys):
        code, out, _ = run(capsys, "triple", "--s", "2", "--t", "1", "--r", "2", "--format", "text")
        assert code == 0 and out.startswith("x=3 y=4 z=5")

    @pytest.mark.parametrize("s,t,kind", [("2", "2", "NotCoprime"), ("5", "3", "ParityError"),
                                         ("3", "2", "DomainViolation")])
    def test_errors(self, capsys, s, t, kind):
        code, out, err = run(capsys, "triple", "--s", s, "--t", t, "--r", "3")
        assert code == 2 and out == ""
        assert json.loads(err)["error"] == kind

    def test_missing_args(self, capsys):
        code, _, err = run(capsys, "triple", "--s", "9")
        assert code == 2 and "error" in json.loads(err)


class TestCompute:
    def test_gens(self, capsys):
        code, out, _ = run(capsys, "compute", "--gens", "3,4,5", "--p", "0")
        assert code == 0 and "g=2 n=2 s=3" in out

    def test_pair(self, capsys):
        code, out, _ = run(capsys, "compute", "--gens", "2,3", "--json")
        assert json.loads(out)["generic"] == {"g": 1, "n": 1, "s": 1}

    def test_both_p1(self, capsys):
        code, out, _ = run(capsys, "compute", "--s", "18", "--t", "5", "--r", "3",
                           "--p", "1", "--method", "both", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["closed"]["g"] == data["generic"]["g"] == 197871
        assert data["agree"] is True

    def test_oracle(self, capsys):
        code, out, _ = run(capsys, "compute", "--gens", "3,4,5", "--p", "1", "--method", "oracle")
        assert code == 0 and "g=7 n=8 s=28" in out

    def test_oracle_cap(self, capsys):
        code, _, err = run(capsys, "compute", "--gens", "97,297,908", "--method", "oracle",
                           "--max-bound", "100")
        assert code == 3 and json.loads(err)["error"] == "BoundCapExceeded"

    def test_closed_needs_params(self, capsys):
        code, _, _ = run(capsys, "compute", "--gens", "3,4,5", "--method", "closed")
        assert code == 2

    def test_closed_outside_window(self, capsys):
        code, _, err = run(capsys, "compute", "--s", "9", "--t", "4", "--r", "3", "--p", "1",
                           "--method", "closed")
        assert code == 2 and json.loads(err)["error"] == "NoClosedForm"

    def test_irregular_uses_extraction(self, capsys):
        code, out, _ = run(capsys, "compute", "--s", "11", "--t", "6", "--r", "3",
                           "--method", "both")
        assert code == 0 and "irregular" in out and "agree" in out

    def test_bad_gens(self, capsys):
        with pytest.raises(SystemExit):
            cli.main(["compute", "--gens", "3,x"])
        capsys.readouterr()

    def test_not_coprime_gens(self, capsys):
        code, _, err = run(capsys, "compute", "--gens", "4,6")
        assert code == 2 and json.loads(err)["error"] == "NotCoprime"

    def test_mismatch_exit(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "_closed_for", lambda tr, p: (1, None, "fake"))
        code, out, _ = run(capsys, "compute", "--s", "9", "--t", "4", "--r", "3",
                           "--method", "both")
        assert code == 1 and "MISMATCH" in out


class TestApery:
    def test_l_shape(self, capsys):
        code, out, _ = run(capsys, "apery", "--s", "9", "--t", "4", "--r", "3")
        assert code == 0
        assert "(21, 3)" in out and "g_0 = 8864" in out

    def test_irregular(self, capsys):
        code, out, _ = run(capsys, "apery", "--s", "11", "--t", "6", "--r", "3", "--format", "json")
        data = json.loads(out)
        assert {tuple(c) for c in data["corners"]} == {(37, 2), (28, 3)}
        assert data["axes"] == ["z", "y"]

    def test_gens(self, capsys):
        code, out, _ = run(capsys, "apery", "--gens", "3,4,5", "--format", "json")
        assert [e["m"] for e in json.loads(out)["entries"]] == [0, 4, 5]

    def test_grid_values(self, capsys):
        code, out, _ = run(capsys, "apery", "--s", "2", "--t", "1", "--r", "2", "--grid", "--values")
        assert code == 0 and "outer corners" in out

    def test_p1_candidates(self, capsys):
        code, out, _ = run(capsys, "apery", "--s", "18", "--t", "5", "--r", "3", "--p", "1")
        assert code == 0 and "g_1 = 197871" in out


class TestClassify:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "classify", "--s", "31", "--t", "10", "--r", "5")
        assert code == 0 and out.startswith("r5:u6")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "classify", "--s", "5", "--t", "2", "--r", "4", "--json")
        data = json.loads(out)
        assert data["boundary"] is True and data["case_id"] == "boundary"

    def test_unsupported(self, capsys):
        code, _, err = run(capsys, "classify", "--s", "10", "--t", "1", "--r", "6")
        assert code == 2 and json.loads(err)["error"] == "UnsupportedRegime"


class TestVerify:
    def test_r2(self, capsys):
        code, out, _ = run(capsys, "verify", "--r", "2", "--z-max", "500")
        assert code == 0 and "0 mismatches" in out

    def test_r3_both_levels(self, capsys):
        code, out, _ = run(capsys, "verify", "--r", "3", "--z-max", "1000", "--p", "0", "--p", "1")
        assert code == 0 and "no-closed-form=" in out and "0 mismatches" in out

    def test_csv_header_golden(self, capsys, tmp_path):
        path = tmp_path / "rows.csv"
        code, _, _ = run(capsys, "verify", "--r", "3", "--z-max", "300", "--csv", str(path))
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == GOLDEN.read_text().strip()
        assert lines[0].split(",") == list(CSV_COLUMNS)
        rows = list(csv.DictReader(io.StringIO(path.read_text())))
        assert [(int(r["s"]), int(r["t"])) for r in rows] == sorted(
            (int(r["s"]), int(r["t"])) for r in rows)

    def test_csv_stdout_and_report(self, capsys, tmp_path):
        rep = tmp_path / "report.json"
        code, out, err = run(capsys, "verify", "--r", "4", "--z-max", "200", "--csv", "-",
                             "--report", str(rep), "--oracle")
        assert code == 0
        assert out.splitlines()[0] == GOLDEN.read_text().strip()
        assert "mismatches" in err
        data = json.loads(rep.read_text())
        assert data["type"] == "ReportDocument" and data["discrepancies"] == []

    def test_parallel_order(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "verify", "--r", "3", "--z-max", "600", "--csv", str(a))
        run(capsys, "verify", "--r", "3", "--z-max", "600", "--csv", str(b), "--jobs", "2")

        def strip(p):
            return [line.rsplit(",", 1)[0] for line in p.read_text().splitlines()]

        assert strip(a) == strip(b)

    def test_small_bound(self, capsys):
        code, _, _ = run(capsys, "verify", "--r", "3", "--z-max", "4")
        assert code == 2

    def test_mismatch_exit(self, capsys, monkeypatch):
        from frobtriples import sweep

        monkeypatch.setattr(sweep, "closed_stats", lambda tr, p: (-5, None, "fake"))
        code, _, err = run(capsys, "verify", "--r", "2", "--z-max", "50")
        assert code == 1 and "mismatch" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "frobtriples", "triple", "--s", "2", "--t", "1",
                           "--r", "2"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["z"] == 5
