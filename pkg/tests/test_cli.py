from __future__ import annotations

import json

import pytest

from hyperpd import cli, families
from hyperpd.cli import EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from hyperpd.sweeps import VerifyOutcome

BIG = "abk, bcl, cdklm, dekn, efgn, ghmn, hikl, ijk"


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fields(text: str) -> dict[str, str]:
    return dict(line.split("\t", 1) for line in text.splitlines() if "\t" in line and not line.startswith("#"))


class TestPd:
    def test_ideal_file(self, capsys, write):
        code, out, _ = run(capsys, "pd", write("s.txt", "(ab, bc, cd)\n"))
        assert code == EXIT_OK
        assert fields(out) == {"pd": "2", "method": "formula:open-string", "reg": "1"}

    def test_hypergraph_json(self, capsys, write):
        path = write("h3.json", families.string_with_edge(9, (3, 6, 9)).to_json())
        code, out, _ = run(capsys, "pd", path)
        assert code == EXIT_OK and fields(out)["pd"] == "6"

    def test_explain_shows_union_removal(self, capsys, write):
        code, out, _ = run(capsys, "pd", write("big.txt", BIG), "--explain")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "pd\t6"
        assert "# removed union edges: k, n" in lines

    def test_oracle_flag_agrees(self, capsys, write):
        path = write("h1.json", families.string_with_edge(9, (3, 5, 8)).to_json())
        _, a, _ = run(capsys, "pd", path)
        _, b, _ = run(capsys, "pd", path, "--oracle")
        assert fields(a)["pd"] == fields(b)["pd"] == "7"
        assert fields(b)["method"] == "oracle"

    def test_json_output(self, capsys, write):
        code, out, _ = run(capsys, "pd", write("s.txt", "ab, bc, cd"), "--json")
        assert json.loads(out) == {"pd": 2, "method": "formula:open-string", "reg": 1}

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("x"))
        code, out, _ = run(capsys, "pd", "-")
        assert code == EXIT_OK and fields(out)["pd"] == "1"

    def test_budget_exceeded(self, capsys, write):
        code, _, err = run(capsys, "pd", write("big.txt", BIG), "--budget", "5")
        assert code == EXIT_BUDGET and "budget" in err


class TestUsageErrors:
    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "pd", str(tmp_path / "nosuch"))
        assert code == EXIT_USAGE and "cannot read" in err

    @pytest.mark.parametrize("text", ["ab, a b", "aab", "{\"mu\": 2}", ""])
    def test_bad_input(self, capsys, write, text):
        code, _, err = run(capsys, "pd", write("bad.txt", text))
        assert code == EXIT_USAGE and err.startswith("error:")

    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bogus"])
        assert exc.value.code == EXIT_USAGE

    def test_bad_field(self, capsys, write):
        with pytest.raises(SystemExit) as exc:
            main(["pd", write("s.txt", "ab"), "--field", "4"])
        assert exc.value.code == EXIT_USAGE


class TestBetti:
    def test_tsv(self, capsys, write):
        code, out, _ = run(capsys, "betti", write("s.txt", "ab, bc, cd"))
        assert code == EXIT_OK
        assert out.splitlines()[0] == "i\tsigma\trank"
        assert out.splitlines()[-1] == "# pd=2 reg=1 totals=1,3,2"

    def test_json_char_two(self, capsys, write):
        code, out, _ = run(capsys, "betti", write("s.txt", "ab, bc, cd"), "--json", "--field", "2")
        data = json.loads(out)
        assert data["field_char"] == 2 and data["pd"] == 2


class TestClassify:
    def test_string_with_edge(self, capsys, write):
        path = write("h.json", families.string_with_edge(11, (2, 5, 8, 11)).to_json())
        code, out, _ = run(capsys, "classify", path)
        f = fields(out)
        assert code == EXIT_OK
        assert f["shape"] == "string-with-edge" and f["gaps"] == "1,2,2,2,0" and f["k"] == "4"
        assert f["separated"] == "true" and f["removed_union_edges"] == ""

    def test_json(self, capsys, write):
        code, out, _ = run(capsys, "classify", write("big.txt", BIG), "--json")
        data = json.loads(out)
        assert data["removed_union_edges"] == ["k", "n"] and data["shape"] == "other"


class TestVerify:
    def test_strings(self, capsys):
        code, out, err = run(capsys, "verify", "strings", "--max-mu", "12")
        assert code == EXIT_OK
        assert fields(out) == {"family": "strings", "instances": "12", "mismatches": "0"}
        assert err.startswith("elapsed")

    def test_lemmas_family(self, capsys):
        code, out, _ = run(capsys, "verify", "lemmas", "--family", "stringedge", "--max-mu", "10")
        assert code == EXIT_OK and fields(out)["mismatches"] == "0"

    def test_budget(self, capsys):
        code, _, err = run(capsys, "verify", "strings", "--max-mu", "12", "--budget", "10")
        assert code == EXIT_BUDGET and "budget" in err

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        fake = VerifyOutcome("cycles", 1, [("cycle mu=05", 3, 4)])
        monkeypatch.setitem(cli.VERIFIERS, "cycles", lambda **kw: fake)
        code, out, _ = run(capsys, "verify", "cycles")
        assert code == EXIT_MISMATCH
        assert "MISMATCH\tcycle mu=05\tformula=3\toracle=4" in out.splitlines()


class TestConjectureSearch:
    def test_three_cycle_trivial(self, capsys):
        code, out, _ = run(capsys, "conjecture-search", "--max-mu", "3")
        assert code == EXIT_OK
        assert fields(out)["counterexamples"] == "0"

    def test_small_search_reports_chords(self, capsys, tmp_path):
        code, out, _ = run(capsys, "conjecture-search", "--max-mu", "5", "--dump", str(tmp_path / "cx"))
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0].startswith("mu\t3\tinstances\t0")
        found = [line for line in lines if line.startswith("COUNTEREXAMPLE")]
        assert int(fields(out)["counterexamples"]) == len(found)
        assert len(list((tmp_path / "cx").glob("*.json"))) == len(found)

    def test_bad_bounds(self, capsys):
        code, _, _ = run(capsys, "conjecture-search", "--max-mu", "2")
        assert code == EXIT_USAGE

    def test_budget(self, capsys):
        code, _, _ = run(capsys, "conjecture-search", "--max-mu", "8", "--max-edges", "3", "--budget", "9")
        assert code == EXIT_BUDGET

    def test_deterministic(self, capsys):
        _, a, _ = run(capsys, "conjecture-search", "--max-mu", "6", "--cap", "30", "--seed", "3")
        _, b, _ = run(capsys, "conjecture-search", "--max-mu", "6", "--cap", "30", "--seed", "3")
        assert a == b
