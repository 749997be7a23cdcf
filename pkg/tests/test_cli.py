import io
import json
import subprocess
import sys

import pytest

from yablo.cli import main
from yablo.graph import format_edge_list, parse_edge_list, witness_chain
from yablo.verify import GRAPH1, GRAPH2


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.txt"):
        path = tmp_path / name
        path.write_text(format_edge_list(g))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSolve:
    def test_graph1_no_kernel(self, capsys, graph_file):
        assert run(capsys, "solve", graph_file(GRAPH1))[:2] == (1, "NO-KERNEL\n")

    def test_four_cycle_enumerate(self, capsys, tmp_path):
        path = tmp_path / "c4.txt"
        path.write_text("digraph 4\n0 1\n1 2\n2 3\n3 0\n")
        code, out, _ = run(capsys, "solve", str(path), "--enumerate")
        assert code == 0
        assert out == "KERNEL {0, 2}\nKERNEL {1, 3}\n"

    def test_oracle_and_stats(self, capsys, tmp_path):
        path = tmp_path / "c4.txt"
        path.write_text("digraph 4\n0 1\n1 2\n2 3\n3 0\n")
        assert run(capsys, "solve", str(path), "--oracle")[:2] == (0, "KERNEL {0, 2}\n")
        code, out, err = run(capsys, "solve", str(path), "--stats")
        assert code == 0 and "decisions=" in err

    def test_malformed(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("digraph 2\n0 5\n")
        code, _, err = run(capsys, "solve", str(path))
        assert code == 2 and "line 2" in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "solve", str(tmp_path / "nope.txt"))[0] == 2

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO("digraph 1\n0 0\n"))
        assert run(capsys, "solve", "-")[:2] == (1, "NO-KERNEL\n")


class TestEval:
    def test_axiom(self, capsys, graph_file):
        assert run(capsys, "eval", graph_file(GRAPH2), "--axiom", "A1")[:2] == (0, "TRUE\n")
        assert run(capsys, "eval", graph_file(GRAPH2), "--axiom", "A2")[:2] == (1, "FALSE\n")

    def test_theta(self, capsys, graph_file):
        assert run(capsys, "eval", graph_file(witness_chain(1)), "--theta", "0")[:2] == (1, "{1, 2}\n")
        assert run(capsys, "eval", graph_file(witness_chain(1)), "--theta", "1")[:2] == (0, "{0, 1, 2}\n")

    def test_formula(self, capsys, graph_file):
        assert run(capsys, "eval", graph_file(GRAPH1), "--formula", "forall x. R(x,x)")[:2] == (1, "FALSE\n")

    def test_free_variable_is_error(self, capsys, graph_file):
        code, _, err = run(capsys, "eval", graph_file(GRAPH1), "--formula", "R(x,x)")
        assert code == 2 and "free variables: x" in err

    def test_syntax_error(self, capsys, graph_file):
        code, _, err = run(capsys, "eval", graph_file(GRAPH1), "--formula", "~(p)")
        assert code == 2 and "1:4" in err

    def test_succ_on_non_functional(self, capsys, graph_file):
        code, _, err = run(capsys, "eval", graph_file(GRAPH1), "--axiom", "S")
        assert code == 2 and "functional" in err

    def test_no_odd_cycle_axiom(self, capsys, tmp_path):
        path = tmp_path / "c5.txt"
        path.write_text(format_edge_list(parse_edge_list("digraph 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")))
        assert run(capsys, "eval", str(path), "--axiom", "no_odd_cycle(1)")[0] == 0
        assert run(capsys, "eval", str(path), "--axiom", "no_odd_cycle(2)")[0] == 1


class TestGen:
    def test_witness_chain(self, capsys):
        assert run(capsys, "gen", "--witness-chain", "1")[:2] == (0, "digraph 3\n0 1\n1 2\n2 2\n")

    def test_cycle(self, capsys):
        out = run(capsys, "gen", "--cycle", "5")[1]
        assert out == "digraph 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"

    def test_successor(self, capsys):
        out = run(capsys, "gen", "--successor", "cycles=[2,4] n=0 z=0")[1]
        g = parse_edge_list(out)
        assert g.n == 6 and g.is_functional()

    def test_successor_with_chains_is_error(self, capsys):
        assert run(capsys, "gen", "--successor", "cycles=[2] n=1 z=0")[0] == 2

    def test_random_reproducible(self, capsys):
        a = run(capsys, "gen", "--random", "8", "0.3", "42")[1]
        b = run(capsys, "gen", "--random", "8", "0.3", "42")[1]
        assert a == b

    def test_random_bad(self, capsys):
        assert run(capsys, "gen", "--random", "8", "1.3", "42")[0] == 2
        assert run(capsys, "gen", "--random", "x", "0.3", "42")[0] == 2


class TestVerify:
    def test_fixtures(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "fixtures")
        assert code == 0 and "summary: 4 checks, 0 failures -> OK" in out

    def test_compactness_single(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "compactness", "--N", "10")
        assert code == 0 and "C23.no_kernel" in out

    def test_cap_error(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "thetas", "--max-n", "9")
        assert code == 2 and "cap" in err

    def test_unknown_suite(self, capsys):
        assert run(capsys, "verify", "--suite", "bogus")[0] == 2

    def test_json_out_file(self, capsys, tmp_path):
        out = tmp_path / "r.json"
        code, stdout, _ = run(capsys, "verify", "--suite", "lemma", "--format", "json", "--out", str(out))
        assert code == 0 and "OK" in stdout
        assert json.loads(out.read_text())["ok"] is True

    def test_byte_identical(self, capsys):
        args = ("verify", "--suite", "thetas", "--samples", "30", "--seed", "5")
        assert run(capsys, *args)[1] == run(capsys, *args)[1]


def test_gen_solve_pipeline():
    gen = subprocess.run(
        [sys.executable, "-m", "yablo", "gen", "--witness-chain", "2"],
        capture_output=True, text=True, check=True,
    )
    solved = subprocess.run(
        [sys.executable, "-m", "yablo", "solve", "-"], input=gen.stdout, capture_output=True, text=True
    )
    assert solved.returncode == 1 and solved.stdout == "NO-KERNEL\n"
    even = subprocess.run(
        [sys.executable, "-m", "yablo", "gen", "--successor", "cycles=[2,4]"],
        capture_output=True, text=True, check=True,
    )
    solved = subprocess.run(
        [sys.executable, "-m", "yablo", "solve", "-"], input=even.stdout, capture_output=True, text=True
    )
    assert solved.returncode == 0 and solved.stdout.startswith("KERNEL")
