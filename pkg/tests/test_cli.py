"""
Tests for the command-line interface.
"""

import json
from pathlib import Path

import pytest

from cli import run
from cli.refs import parse_rspec
from errors import InvalidRSpec

GOLDEN = Path(__file__).parent / "golden"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def error_of(err: str) -> dict:
    """The JSON error document, skipping any log lines before it."""
    return json.loads(err[err.index("{\n"):])


class TestMetafibCommands:
    """Test metafib subcommands."""

    @pytest.mark.parametrize("ref,k,golden", [
        ("pow2", 10, "pow2_k10.csv"),
        ("indicator:pow2:2:1", 16, "linear_indicator_k16.csv"),
        ("identity", 10, "identity_k10.csv"),
    ])
    def test_gen_matches_golden(self, capsys, ref, k, golden):
        code, out, _ = invoke(capsys, "metafib", "gen", "--r", ref, "--k", str(k), "--format", "csv")
        assert code == 0
        assert out == (GOLDEN / golden).read_text()

    def test_gen_json(self, capsys):
        code, out, _ = invoke(capsys, "metafib", "gen", "--r", "fib", "--k", "6")
        assert code == 0
        payload = json.loads(out)
        assert payload["values"] == [1, 2, 3, 5, 8, 13]
        assert payload["r"] == [1, 2, 2, 2, 2, 2]

    def test_infer(self, capsys):
        code, out, _ = invoke(capsys, "metafib", "infer", "--values", "1,2,5,13")
        assert code == 0
        assert json.loads(out)["r"] == [1, 2, 4, 8]

    def test_infer_not_metafib(self, capsys):
        code, out, err = invoke(capsys, "metafib", "infer", "--values", "2,3,4")
        assert code == 1
        assert out == ""
        error = error_of(err)
        assert error["error"] == "not_metafib"
        assert error["k"] == 3

    def test_gamma_large_r(self, capsys):
        code, out, _ = invoke(capsys, "metafib", "gamma", "--r", "60")
        assert code == 0
        assert json.loads(out)["gamma"] < 2.0

    def test_unknown_rspec(self, capsys):
        code, _, err = invoke(capsys, "metafib", "gen", "--r", "quadratic", "--k", "4")
        assert code == 1
        assert error_of(err)["error"] == "invalid_rspec"

    def test_bounds(self, capsys):
        code, out, _ = invoke(capsys, "metafib", "bounds", "--r", "fib", "--k", "20", "--J", "1", "--M", "1")
        assert code == 0
        checks = json.loads(out)
        assert [c["bound"] for c in checks] == ["lower", "upper", "plateau", "doubling"]
        assert all(c["passed"] for c in checks)

    def test_bounds_precondition(self, capsys):
        code, _, err = invoke(capsys, "metafib", "bounds", "--r", "const:1", "--k", "10", "--J", "5")
        assert code == 1
        assert error_of(err)["error"] == "precondition_failed"

    def test_gamma(self, capsys):
        code, out, _ = invoke(capsys, "metafib", "gamma", "--r", "2", "--report", "30")
        assert code == 0
        payload = json.loads(out)
        assert abs(payload["gamma"] - 1.6180339887) < 1e-9
        assert "report" in payload

    @pytest.mark.parametrize("argv", [
        ["metafib"],
        ["metafib", "gen", "--r", "pow2"],
        ["metafib", "gen", "--r", "pow2", "--k", "ten"],
        ["metafib", "gen", "--r", "pow2", "--k", "3", "--format", "xml"],
        ["nope"],
    ])
    def test_usage_errors(self, capsys, argv):
        assert run(argv) == 2


class TestTwdCommands:
    """Test twd subcommands."""

    def test_fibonacci_chain(self, capsys):
        code, out, _ = invoke(capsys, "twd", "chain", "--model", "binary", "--end", "fib", "--k", "8")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"][:8] == [1, 1, 2, 3, 5, 8, 13, 21]
        assert payload["l"] == [0, 1, 3, 6, 11, 19, 32, 53, 87]
        assert payload["r"] == [1, 1, 2, 2, 2, 2, 2, 2, 2]
        assert payload["nonrecurrent_at"] is None

    def test_chain_csv(self, capsys):
        code, out, _ = invoke(capsys, "twd", "chain", "--model", "binary", "--end", "periodic:01",
                              "--k", "3", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["k,l,n,r", "0,0,1,1", "1,1,1,1", "2,3,2,2", "3,5,2,1"]

    def test_nonrecurrent_end(self, capsys):
        code, out, _ = invoke(capsys, "twd", "chain", "--model", "binary", "--end", "word:1:0", "--k", "4")
        assert code == 0
        payload = json.loads(out)
        assert payload["l"] == [0, 1]
        assert payload["nonrecurrent_at"] == 1

    def test_budget_exhausted(self, capsys):
        code, _, err = invoke(capsys, "twd", "chain", "--model", "binary", "--end", "fib", "--k", "8",
                              "--scan", "4")
        assert code == 1
        error = error_of(err)
        assert error["error"] == "budget_exhausted"
        assert error["partial"]["levels"] == [0, 1, 3, 6]

    def test_non_positive_shift(self, capsys):
        code, _, err = invoke(capsys, "twd", "chain", "--model", "z2:F:0", "--end", "periodic:0", "--k", "2")
        assert code == 1
        assert error_of(err)["error"] == "non_positive_shift"

    def test_validate(self, capsys):
        code, out, _ = invoke(capsys, "twd", "validate", "--model", "binary", "--depth", "10")
        assert code == 0
        payload = json.loads(out)
        assert payload["clean"] is True
        assert payload["vertices_checked"] == 1033
        assert payload["H"] == 1

    def test_validate_csv_clean(self, capsys):
        code, out, _ = invoke(capsys, "twd", "validate", "--model", "z2:G:2", "--depth", "4", "--format", "csv")
        assert code == 0
        assert out == "kind,witness,detail\n"

    def test_period(self, capsys):
        code, out, _ = invoke(capsys, "twd", "period", "--model", "binary", "--end", "word:0:110")
        assert code == 0
        payload = json.loads(out)
        assert payload["period"] == 3
        assert payload["periodic"] is True

    def test_unknown_model(self, capsys):
        code, _, err = invoke(capsys, "twd", "validate", "--model", "ternary")
        assert code == 1
        assert error_of(err)["error"] == "model_format_error"


class TestPuzzleAndYoccozCommands:
    """Test puzzle and yoccoz subcommands."""

    def build_basilica(self, capsys, tmp_path, depth: int = 3) -> Path:
        code, out, _ = invoke(capsys, "yoccoz", "build", "--classes", "1/3,2/3", "--depth", str(depth))
        assert code == 0
        path = tmp_path / "basilica.json"
        path.write_text(out)
        return path

    def test_build_writes_dot(self, capsys, tmp_path):
        dot = tmp_path / "basilica.dot"
        code, out, _ = invoke(capsys, "yoccoz", "build", "--classes", "1/3,2/3", "--depth", "3",
                              "--dot", str(dot))
        assert code == 0
        assert json.loads(out)["window"] == [-3, 3]
        text = dot.read_text()
        assert text.count("[label=") == 14
        assert text.count("rank=same") == 7

    def test_build_csv(self, capsys):
        code, out, _ = invoke(capsys, "yoccoz", "build", "--classes", "1/3,2/3", "--depth", "3",
                              "--format", "csv")
        assert code == 0
        assert out.splitlines()[-3:] == ["1,2", "2,3", "3,5"]

    def test_build_bad_classes(self, capsys):
        code, _, err = invoke(capsys, "yoccoz", "build", "--classes", "1/3")
        assert code == 1
        assert error_of(err)["error"] == "model_format_error"

    def test_critical_nest(self, capsys):
        code, out, _ = invoke(capsys, "yoccoz", "nest", "--classes", "1/3,2/3")
        assert code == 0
        payload = json.loads(out)
        assert payload["levels"] == [0, 1, 3, 5]
        assert payload["times"] == [1, 1, 2, 2]

    def test_puzzle_validate(self, capsys, tmp_path):
        path = self.build_basilica(capsys, tmp_path)
        code, out, _ = invoke(capsys, "puzzle", "validate", "--puzzle", str(path))
        assert code == 0
        payload = json.loads(out)
        assert payload["clean"] is True
        assert payload["exceptional"] == ["P_1^0", "P_1^1"]

    def test_puzzle_tree(self, capsys, tmp_path):
        path = self.build_basilica(capsys, tmp_path)
        code, out, _ = invoke(capsys, "puzzle", "tree", "--puzzle", str(path), "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "id,level,parent,image"
        assert len(lines) == 15

    def test_puzzle_nest(self, capsys, tmp_path):
        path = self.build_basilica(capsys, tmp_path)
        code, out, _ = invoke(capsys, "puzzle", "nest", "--puzzle", str(path),
                              "--nest", "P_0,P_1^0,P_2^0,P_3^0", "--k", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["levels"] == [0, 1, 3]
        assert payload["pieces"] == ["P_0", "P_1^0", "P_3^0"]

    def test_missing_puzzle_file(self, capsys, tmp_path):
        code, _, err = invoke(capsys, "puzzle", "validate", "--puzzle", str(tmp_path / "none.json"))
        assert code == 1
        assert error_of(err)["error"] == "model_format_error"


class TestRefs:
    """Test r refs."""

    def test_table_with_tail(self):
        spec = parse_rspec("table:3,1:const:2")
        assert spec.values(4) == [3, 1, 2, 2]

    def test_residue(self):
        assert parse_rspec("indicator:mod:3:1:4:1").values(4) == [4, 1, 1, 4]

    @pytest.mark.parametrize("ref", ["sharp:0", "const:x", "indicator:pow2:2", "table:"])
    def test_invalid(self, ref):
        with pytest.raises(InvalidRSpec):
            parse_rspec(ref)
