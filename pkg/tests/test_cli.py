"""Command-line interface: each subcommand, exit codes, output shapes."""

from __future__ import annotations

import subprocess
import sys

import pytest

from quiver_regrade.cli import main

KXY = "[quiver]\nvertex v\narrow x v v 1\narrow y v v 2\n\n[relations]\nx*y - y*x\n"
BAD = "[quiver]\nvertex v\narrow x v w 1\n"


@pytest.fixture
def kxy_file(tmp_path):
    p = tmp_path / "kxy.quiver"
    p.write_text(KXY)
    return str(p)


@pytest.fixture
def bad_file(tmp_path):
    p = tmp_path / "bad.quiver"
    p.write_text(BAD)
    return str(p)


class TestValidate:
    def test_ok(self, kxy_file, capsys):
        assert main(["validate", kxy_file]) == 0
        assert capsys.readouterr().out.strip() == "ok"

    def test_bad_file(self, bad_file, capsys):
        assert main(["validate", bad_file]) == 1
        err = capsys.readouterr().err
        assert "undeclared target 'w'" in err
        assert "line 3" in err

    def test_missing_file(self, tmp_path, capsys):
        assert main(["validate", str(tmp_path / "nope.quiver")]) == 1
        assert capsys.readouterr().err


class TestDiscrepancy:
    def test_value(self, kxy_file, capsys):
        assert main(["discrepancy", kxy_file]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_zero_for_degree_one(self, tmp_path, capsys):
        p = tmp_path / "flat.quiver"
        p.write_text("[quiver]\nvertex v\narrow x v v 1\n")
        assert main(["discrepancy", str(p)]) == 0
        assert capsys.readouterr().out.strip() == "0"


class TestSplit:
    def test_splits_named_arrow(self, kxy_file, capsys):
        assert main(["split", kxy_file, "--arrow", "y"]) == 0
        out = capsys.readouterr().out
        assert "arrow y' v z 1" in out
        assert "arrow y'' z v 1" in out
        assert "x*y'*y'' - y'*y''*x" in out

    def test_degree_one_arrow_rejected(self, kxy_file, capsys):
        assert main(["split", kxy_file, "--arrow", "x"]) == 1
        assert capsys.readouterr().err

    def test_unknown_arrow_rejected(self, kxy_file, capsys):
        assert main(["split", kxy_file, "--arrow", "nope"]) == 1
        assert capsys.readouterr().err


class TestRegrade:
    def test_stdout_matches_golden(self, golden_dir, capsys):
        assert main(["regrade", str(golden_dir / "kxy.quiver")]) == 0
        got = capsys.readouterr().out
        want = (golden_dir / "kxy_regraded.quiver").read_text()
        assert got == want

    def test_output_file(self, kxy_file, tmp_path, capsys):
        out_path = tmp_path / "out.quiver"
        assert main(["regrade", kxy_file, "-o", str(out_path)]) == 0
        text = out_path.read_text()
        assert "# regrade: 1 split" in text
        assert "arrow y' v z 1" in text

    def test_roundtrips_through_parser(self, kxy_file, capsys):
        from quiver_regrade import parse_presentation, weight_discrepancy

        main(["regrade", kxy_file])
        out = capsys.readouterr().out
        q, _ = parse_presentation(out)
        assert weight_discrepancy(q) == 0


class TestHilbert:
    def test_table(self, kxy_file, capsys):
        assert main(["hilbert", kxy_file, "--max-degree", "6"]) == 0
        out = capsys.readouterr().out
        rows = [line.split() for line in out.strip().splitlines()]
        assert rows == [
            ["0", "1"], ["1", "1"], ["2", "2"], ["3", "2"],
            ["4", "3"], ["5", "3"], ["6", "4"],
        ]

    def test_rational_field_same_table(self, kxy_file, capsys):
        main(["hilbert", kxy_file, "--max-degree", "6"])
        default_out = capsys.readouterr().out
        main(["hilbert", kxy_file, "--max-degree", "6", "--field", "q"])
        assert capsys.readouterr().out == default_out

    def test_vertex_filter(self, kxy_file, capsys):
        assert main(["hilbert", kxy_file, "--max-degree", "3", "--vertex", "v"]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "0 1"

    def test_unknown_vertex(self, kxy_file, capsys):
        assert main(["hilbert", kxy_file, "--max-degree", "3", "--vertex", "zz"]) == 1
        assert "unknown vertex" in capsys.readouterr().err

    def test_bad_field_spec(self, kxy_file, capsys):
        assert main(["hilbert", kxy_file, "--max-degree", "3", "--field", "p4"]) == 2


class TestVerify:
    def test_small_run_ok(self, capsys):
        rc = main(["verify", "--suite", "split", "--trials", "5"])
        captured = capsys.readouterr()
        assert rc == 0
        assert "[suite] split (seed 0)" in captured.out
        assert "[verify] OK" in captured.out
        assert "wall time" in captured.err
        assert "wall" not in captured.out

    def test_file_gate(self, kxy_file, bad_file, capsys):
        assert main(["verify", kxy_file, "--suite", "split", "--trials", "3"]) == 0
        capsys.readouterr()
        assert main(["verify", bad_file, "--suite", "split", "--trials", "3"]) == 1
        assert capsys.readouterr().err

    def test_window_flag(self, capsys):
        rc = main(
            ["verify", "--suite", "functor", "--trials", "3", "--window=-1:6"]
        )
        assert rc == 0

    def test_bad_window(self, capsys):
        assert main(["verify", "--suite", "split", "--window=oops"]) == 2

    def test_unknown_suite(self, capsys):
        assert main(["verify", "--suite", "bogus"]) == 2


class TestUsage:
    def test_no_args(self, capsys):
        assert main([]) == 2

    def test_unknown_command(self, capsys):
        assert main(["nonsense"]) == 2

    def test_missing_required(self, capsys):
        assert main(["regrade"]) == 2
        assert main(["split", "x.quiver"]) == 2

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "quiver-regrade" in capsys.readouterr().out


def test_module_entry_subprocess(golden_dir):
    # The module must also work as a fresh process via python -m.
    proc = subprocess.run(
        [sys.executable, "-m", "quiver_regrade.cli", "discrepancy",
         str(golden_dir / "kxy.quiver")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1"
