"""Command-line interface: subcommands, exit codes, and output formats."""

import json
import subprocess
import sys

import pytest

from cent_atlas.catalog import dihedral, witness_h
from cent_atlas.cli import main
from cent_atlas.report import analyze, write_group_file


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstruct:
    def test_stdout_json(self, capsys):
        code, out, _ = run(["construct", "--family", "dihedral", "--n", "8"], capsys)
        assert code == 0
        payload = json.loads(out)
        assert payload["order"] == 8
        assert payload["label"] == "D8"
        assert len(payload["table"]) == 8

    def test_to_file(self, tmp_path, capsys):
        dest = tmp_path / "g.json"
        code, _, _ = run(["construct", "--family", "cyclic", "--n", "6",
                          "--out", str(dest)], capsys)
        assert code == 0
        assert json.loads(dest.read_text())["order"] == 6

    def test_bad_congruence_names_relation(self, capsys):
        code, _, err = run(["construct", "--family", "witness-h",
                            "--p", "2", "--q", "5", "--i", "2"], capsys)
        assert code == 2
        assert "i^p = 1 (mod q)" in err

    def test_missing_parameter(self, capsys):
        code, _, err = run(["construct", "--family", "cyclic"], capsys)
        assert code == 2
        assert "--n" in err

    def test_order_cap(self, capsys):
        code, _, err = run(["construct", "--family", "cyclic", "--n", "50",
                            "--order-cap", "10"], capsys)
        assert code == 2


class TestAnalyze:
    def test_json_round_trip(self, tmp_path, capsys):
        src = tmp_path / "a4.json"
        code, _, _ = run(["construct", "--family", "alternating", "--n", "4",
                          "--out", str(src)], capsys)
        assert code == 0
        code, out, _ = run(["analyze", "--in", str(src)], capsys)
        assert code == 0
        got = json.loads(out)
        from cent_atlas.catalog import alternating
        want = analyze(alternating(4)).to_jsonable()
        assert got == want

    def test_markdown(self, tmp_path, capsys):
        src = tmp_path / "d16.json"
        write_group_file(dihedral(16), src)
        code, out, _ = run(["analyze", "--in", str(src), "--format", "md"], capsys)
        assert code == 0
        assert out.startswith("# D16 (order 16)")
        assert "| cent_count | 6 |" in out
        assert "| omega | 5 |" in out

    def test_csv_to_file(self, tmp_path, capsys):
        src = tmp_path / "c6.json"
        write_group_file(dihedral(6).relabeled("S3"), src)
        dest = tmp_path / "out.csv"
        code, _, _ = run(["analyze", "--in", str(src), "--format", "csv",
                          "--out", str(dest)], capsys)
        assert code == 0
        assert dest.read_text().splitlines()[1].startswith("S3,6,")

    def test_invalid_table_is_input_error(self, tmp_path, capsys):
        src = tmp_path / "bad.json"
        src.write_text(json.dumps(
            {"order": 3, "label": "X", "table": [[0, 1, 2], [1, 2, 0], [2, 2, 1]]}))
        code, _, err = run(["analyze", "--in", str(src)], capsys)
        assert code == 3
        assert err

    def test_missing_file(self, tmp_path, capsys):
        code, _, _ = run(["analyze", "--in", str(tmp_path / "nope.json")], capsys)
        assert code == 3

    def test_permutation_input(self, tmp_path, capsys):
        src = tmp_path / "perm.json"
        src.write_text(json.dumps({"degree": 4,
                                   "generators": [[1, 0, 2, 3], [0, 2, 1, 3]]}))
        code, out, _ = run(["analyze", "--in", str(src)], capsys)
        assert code == 0
        assert json.loads(out)["order"] == 6


class TestCatalog:
    def test_writes_files(self, tmp_path, capsys):
        out_dir = tmp_path / "cat"
        code, out, _ = run(["catalog", "--max-order", "20",
                            "--out-dir", str(out_dir)], capsys)
        assert code == 0
        files = sorted(p.name for p in out_dir.glob("*.json"))
        assert len(files) == 24  # 5+5+4+5+5 at orders 8, 12, 16, 18, 20
        assert any(f.startswith("8_1_") for f in files)
        payload = json.loads((out_dir / files[0]).read_text())
        assert set(payload) == {"order", "label", "table"}


class TestVerify:
    def test_pass_line(self, capsys):
        code, out, _ = run(["verify", "--claim", "C12", "--p-max", "2"], capsys)
        assert code == 0
        assert out.startswith("C12: PASS (")

    def test_list(self, capsys):
        code, out, _ = run(["verify", "--list"], capsys)
        assert code == 0
        assert "C0" in out and "C9w" in out

    def test_unknown_claim(self, capsys):
        code, _, err = run(["verify", "--claim", "C99"], capsys)
        assert code == 2

    def test_empty_sweep(self, capsys):
        code, _, err = run(["verify", "--claim", "C0", "--max-order", "7"], capsys)
        assert code == 2

    def test_out_deterministic_across_jobs(self, tmp_path, capsys):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert run(["verify", "--claim", "C7", "--max-order", "100",
                    "--jobs", "1", "--out", str(a)], capsys)[0] == 0
        assert run(["verify", "--claim", "C7", "--max-order", "100",
                    "--jobs", "2", "--out", str(b)], capsys)[0] == 0
        assert a.read_bytes() == b.read_bytes()


class TestWitness:
    def test_true_witness(self, tmp_path, capsys):
        cover = tmp_path / "h.json"
        target = tmp_path / "t.json"
        write_group_file(witness_h(2, 3, 2), cover)
        write_group_file(dihedral(12).relabeled("D12"), target)
        code, out, _ = run(["witness", str(cover), str(target)], capsys)
        assert code == 0
        assert "true" in out
        assert "->" in out  # coset correspondence lines

    def test_false_witness(self, tmp_path, capsys):
        cover = tmp_path / "c4.json"
        target = tmp_path / "t.json"
        from cent_atlas.catalog import cyclic
        write_group_file(cyclic(4), cover)
        write_group_file(cyclic(4), target)
        code, out, _ = run(["witness", str(cover), str(target)], capsys)
        assert code == 4
        assert "false" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cent_atlas", "construct",
         "--family", "cyclic", "--n", "5"],
        capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["order"] == 5


def test_console_script_help():
    proc = subprocess.run([sys.executable, "-m", "cent_atlas", "--help"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    for sub in ("construct", "analyze", "catalog", "verify", "witness"):
        assert sub in proc.stdout
