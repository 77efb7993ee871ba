"""
Tests for the sdenum command line.
"""
import io
import json
from importlib import resources

import pytest

from sdenumerators.cli import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, build_parser, main
from sdenumerators.reproduce import CheckResult


def golden_text(name):
    return resources.files("sdenumerators.data").joinpath(f"golden_{name}.txt").read_text()


class TestInfo:
    """Tests for 'sdenum info'."""

    def test_builtin(self, capsys):
        """Summary of e8."""
        assert main(["info", "--code", "e8"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "dimension: 4" in out
        assert "self-dual: yes" in out
        assert "min weight: 4" in out
        assert "weight distribution: [<0,1>,<4,14>,<8,1>]" in out

    def test_not_self_dual(self, tmp_path, capsys):
        """Codes that are not self-dual are described, not rejected."""
        path = tmp_path / "odd.txt"
        path.write_text("1000\n0100\n")
        assert main(["info", "--generator", str(path), "--format", "structured"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["self_dual"] is False
        assert report["code"] == "odd"

    def test_bad_generator(self, tmp_path, capsys):
        """Malformed matrices exit with status 2."""
        path = tmp_path / "bad.txt"
        path.write_text("1102\n0011\n")
        assert main(["info", "--generator", str(path)]) == EXIT_INPUT_ERROR
        assert "error" in capsys.readouterr().err

    def test_oversized_generator(self, tmp_path, capsys):
        """Codes too large to enumerate are reported, not enumerated."""
        path = tmp_path / "wide.txt"
        path.write_text("".join("0" * i + "1" + "0" * (79 - i) + "\n" for i in range(40)))
        assert main(["info", "--generator", str(path)]) == EXIT_INPUT_ERROR
        assert "2**40 codewords" in capsys.readouterr().err

    def test_missing_source(self):
        """One of --code and --generator is required."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["info"])


class TestDerive:
    """Tests for 'sdenum derive' and 'sdenum design-derive'."""

    def test_golay_direct(self, capsys):
        """The direct Golay listing is the reference listing."""
        assert main(["derive", "--code", "golay24", "--t", "19"]) == EXIT_OK
        assert capsys.readouterr().out == golden_text("golay24")

    def test_step_structured(self, capsys):
        """Structured output of a stepped derivative."""
        assert main(["derive", "--code", "e8", "--t", "3", "--method", "step",
                     "--format", "structured"]) == EXIT_OK
        record = json.loads(capsys.readouterr().out)
        assert (record["n"], record["t"]) == (8, 3)
        assert len(record["entries"]) == 32

    def test_design_method(self, capsys):
        """The design method reproduces the direct listing."""
        assert main(["derive", "--code", "golay24", "--t", "19", "--method", "design"]) == EXIT_OK
        assert capsys.readouterr().out == golden_text("golay24")

    def test_design_method_order(self):
        """The design method only gives order n - 5."""
        assert main(["derive", "--code", "golay24", "--t", "18", "--method", "design"]) == EXIT_INPUT_ERROR

    def test_order_out_of_range(self):
        """Orders beyond n are input errors."""
        assert main(["derive", "--code", "e8", "--t", "9"]) == EXIT_INPUT_ERROR

    @pytest.mark.parametrize("name", ["golay24", "qr48", "length72"])
    def test_design_derive_builtin(self, name, capsys):
        """Shipped profiles give the shipped listings."""
        assert main(["design-derive", "--builtin", name]) == EXIT_OK
        assert capsys.readouterr().out == golden_text(name)

    def test_out_and_manifest(self, tmp_path, capsys):
        """--out writes the result and a manifest."""
        out = tmp_path / "d19.txt"
        assert main(["derive", "--code", "golay24", "--t", "19", "--out", str(out)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        assert out.read_text() == golden_text("golay24")
        manifest = json.loads((tmp_path / "d19.txt.manifest.json").read_text())
        assert manifest["command"] == "derive"
        assert manifest["inputs"] == {"code": "golay24"}
        assert manifest["parameters"]["t"] == 19
        assert manifest["golden_match"] is True
        assert manifest["passed"] is True


class TestEigencheck:
    """Tests for 'sdenum eigencheck'."""

    def test_reference_listing(self, tmp_path, capsys):
        """The qr48 listing passes."""
        path = tmp_path / "qr48.txt"
        path.write_text(golden_text("qr48"))
        assert main(["eigencheck", str(path)]) == EXIT_OK
        assert capsys.readouterr().out == "PASS n=48 t=43 K^[5]\n"

    def test_mutated_listing(self, tmp_path, capsys):
        """Changing one entry fails with status 1."""
        text = golden_text("golay24").replace("0 -1167936*p + 483776", "0 -1167936*p + 483777")
        path = tmp_path / "broken.txt"
        path.write_text(text)
        assert main(["eigencheck", str(path)]) == EXIT_CHECK_FAILED
        assert capsys.readouterr().out.startswith("FAIL")

    def test_stdin(self, monkeypatch, capsys):
        """'-' reads standard input."""
        monkeypatch.setattr("sys.stdin", io.StringIO(golden_text("length72")))
        assert main(["eigencheck", "-", "--format", "structured"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == {"n": 72, "t": 67, "m": 5, "passed": True}


class TestBalance:
    """Tests for 'sdenum balance'."""

    def test_single_coordinate(self, capsys):
        """Default coordinate is 1."""
        assert main(["balance", "--code", "e8"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("t=1 ")
        assert out.rstrip().endswith("PASS")

    def test_all_coordinates(self, capsys):
        """Every coordinate, then the independence line."""
        assert main(["balance", "--code", "c2x4", "--all-coordinates"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 9
        assert all(line.endswith("PASS") for line in lines[:8])
        assert lines[-1] == "lhs identical at all 8 coordinates: yes"

    def test_not_self_dual(self, tmp_path):
        """Balance refuses codes that are not self-dual."""
        path = tmp_path / "odd.txt"
        path.write_text("1000\n0100\n")
        assert main(["balance", "--generator", str(path)]) == EXIT_INPUT_ERROR


class TestCandidates:
    """Tests for 'sdenum candidates' and 'sdenum eliminate'."""

    def test_candidates(self, capsys):
        """Eight candidates of length 8."""
        assert main(["candidates", "--n", "8"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 8
        assert "1,0,0,0,14,0,0,0,1" in lines

    def test_odd_length(self):
        """Odd lengths are input errors."""
        assert main(["candidates", "--n", "7"]) == EXIT_INPUT_ERROR

    def test_eliminate(self, tmp_path, capsys, length8_candidates):
        """Two survivors."""
        path = tmp_path / "candidates.txt"
        path.write_text("".join(",".join(map(str, c)) + "\n" for c in length8_candidates))
        assert main(["eliminate", str(path)]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 8
        assert [line for line in lines if line.endswith("SURVIVES")] == [
            "1,0,0,0,14,0,0,0,1 y=0 SURVIVES",
            "1,0,4,0,6,0,4,0,1 y=3 SURVIVES",
        ]

    def test_eliminate_rejects_bad_candidate(self, monkeypatch):
        """Asymmetric candidates are input errors."""
        monkeypatch.setattr("sys.stdin", io.StringIO("1,0,2,0,10,0,1,0,2\n"))
        assert main(["eliminate"]) == EXIT_INPUT_ERROR


class TestReproduce:
    """Tests for 'sdenum reproduce'."""

    def test_failing_check(self, mocker, capsys):
        """A failed check gives status 1."""
        mocker.patch("sdenumerators.cli.run_checks", return_value=[
            CheckResult("one", True, "fine"),
            CheckResult("two", False, "broken"),
        ])
        assert main(["reproduce"]) == EXIT_CHECK_FAILED
        out = capsys.readouterr().out
        assert "FAIL two: broken" in out
        assert out.rstrip().endswith("1/2 checks passed")

    def test_alias_runs_the_same_checks(self, mocker, capsys):
        """'verify-paper' runs the same checks as 'reproduce'."""
        run = mocker.patch("sdenumerators.cli.run_checks", return_value=[
            CheckResult("one", True, "fine"),
        ])
        assert main(["verify-paper", "--full"]) == EXIT_OK
        assert run.call_args.kwargs["full"] is True
        assert capsys.readouterr().out.rstrip().endswith("1/1 checks passed")

    def test_workers_option(self, mocker):
        """--workers reaches the checks."""
        run = mocker.patch("sdenumerators.cli.run_checks", return_value=[])
        assert main(["reproduce", "--workers", "3"]) == EXIT_OK
        assert run.call_args.kwargs["settings"].workers == 3

    def test_bad_workers(self):
        """Nonpositive worker counts are input errors."""
        assert main(["reproduce", "--workers", "0"]) == EXIT_INPUT_ERROR
