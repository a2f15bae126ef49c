import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from multifun.cli import GraphFileError, read_graph, run

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
GOLDEN = HERE / "golden"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, text, name="g.txt"):
    path = tmp_path / name
    path.write_text(text)
    return path


@pytest.mark.parametrize("name", ["c3", "c4", "p3", "two_component"])
def test_analyze_matches_golden(name):
    code, out, _ = call("analyze", FIXTURES / f"{name}.txt", "--json")
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()


def test_analyze_c4_report():
    code, out, _ = call("analyze", FIXTURES / "c4.txt", "--json")
    result = json.loads(out)["result"]
    assert result["connected"] and result["bipartite"]
    assert result["partition"] == [[0, 2], [1, 3]]


def test_analyze_human_output():
    code, out, _ = call("analyze", FIXTURES / "p3.txt")
    assert code == 0
    assert "connected: true" in out
    assert "partition: 0 2 | 1" in out


def test_walks_enumerate_on_c3():
    code, out, _ = call("walks", FIXTURES / "c3.txt", "--from", 0, "--to", 0, "--length", 3, "--enumerate")
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["exists: true", "count: 2"]
    assert lines[2:] == ["0 1 2 0", "0 2 1 0"]
    code, out, _ = call("walks", FIXTURES / "c3.txt", "--from", 0, "--to", 0, "--length", 3, "--json")
    assert json.loads(out)["result"] == {"from": 0, "to": 0, "length": 3, "exists": True}


def test_primes_leaf():
    code, out, _ = call("primes", "--bound", 100, "--leaf", 2)
    assert (code, out) == (0, "2 4 8 16 32 64\n")


def test_primes_other_queries():
    assert call("primes", "--bound", 30, "--plus", "finite:2,3")[1] == "2 3 4 6 8 9 12 16 18 24 27\n"
    assert call("primes", "--bound", 10, "--minus", "evens")[1] == "2 4 6 8 10\n"
    assert call("primes", "--bound", 10, "--wall", "primes")[1] == "true\n"
    assert call("primes", "--bound", 10, "--wall", "evens")[1] == "false\n"
    code, out, _ = call("primes", "--bound", 20, "--leaf", 3, "--json")
    assert json.loads(out) == {"input": {"bound": 20}, "command": "primes", "result": {"leaf": 3, "numbers": [3, 9]}}


def test_iterate_outputs():
    code, out, _ = call("iterate", FIXTURES / "c4.txt", "--power", 2, "--seed", 0, "--json")
    assert code == 0 and json.loads(out)["result"]["image"] == [0, 2]
    code, out, _ = call("iterate", FIXTURES / "c4.txt", "--power", 2, "--set", 0, 1, "--json")
    assert json.loads(out)["result"]["image"] == [0, 1, 2, 3]
    code, out, _ = call("iterate", FIXTURES / "p3.txt", "--power", 1, "--json")
    assert json.loads(out)["result"]["images"] == [[1], [0, 2], [1]]


def test_metric_output():
    code, out, _ = call("metric", FIXTURES / "two_component.txt", "--json")
    assert json.loads(out)["result"]["distances"][0] == [0, 1, "inf", "inf"]
    code, out, _ = call("metric", FIXTURES / "p3.txt")
    assert out.splitlines() == ["0 1 2", "1 0 1", "2 1 0"]


def test_filters_output():
    code, out, _ = call("filters", FIXTURES / "p3.txt", "--family", "neigh", "--set", 1, "--json")
    result = json.loads(out)["result"]
    assert result["members"] == [[], [0], [2], [0, 2]]
    assert result["size"] == 4
    code, out, _ = call("filters", FIXTURES / "p3.txt", "--family", "build")
    assert code == 0 and "{0, 1, 2}" in out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["analyze"],
        ["iterate", FIXTURES / "c4.txt"],
        ["iterate", FIXTURES / "c4.txt", "--power", 1, "--seed", 0, "--set", 1],
        ["filters", FIXTURES / "p3.txt", "--family", "neigh"],
        ["filters", FIXTURES / "p3.txt", "--family", "isol", "--set", 1],
        ["primes", "--bound", 10],
        ["primes", "--bound", 10, "--leaf", 2, "--wall", "evens"],
        ["walks", FIXTURES / "c3.txt", "--from", "x", "--to", 0, "--length", 1],
    ],
)
def test_usage_errors_exit_1(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err


@pytest.mark.parametrize(
    "text",
    [
        "n 3 undirected\n0 5\n",
        "n 3 sideways\n",
        "0 1\n",
        "n 3 undirected\n0 1\n1 0\n",
        "n 3 undirected\n0\n",
        "n x undirected\n",
        "n 0 undirected\n",
        "# only a comment\n",
    ],
)
def test_parse_errors_exit_2(tmp_path, text):
    code, out, err = call("analyze", write(tmp_path, text))
    assert code == 2 and out == "" and "input error" in err


def test_missing_file_exits_2(tmp_path):
    assert call("analyze", tmp_path / "nope.txt")[0] == 2


def test_out_of_range_seed_exits_2():
    assert call("iterate", FIXTURES / "c4.txt", "--power", 1, "--seed", 9)[0] == 2


def test_semantic_errors_exit_3(tmp_path):
    directed = write(tmp_path, "n 2 directed\n0 1\n")
    assert call("metric", directed)[0] == 3
    assert call("walks", FIXTURES / "c3.txt", "--from", 0, "--to", 0, "--length", 14, "--enumerate")[0] == 3
    assert call("primes", "--bound", 10, "--leaf", 4)[0] == 3
    assert call("primes", "--bound", 10, "--wall", "squares")[0] == 3
    big = write(tmp_path, "n 17 undirected\n0 1\n", "big.txt")
    assert call("filters", big, "--family", "isol")[0] == 3


def test_directed_graph_analysis(tmp_path):
    path = write(tmp_path, "# arcs\nn 3 directed\n0 1\n1 2\n")
    code, out, _ = call("analyze", path, "--json")
    report = json.loads(out)
    assert report["input"] == {"file": "g.txt", "vertices": 3, "directed": True}
    assert report["result"]["components"] is None
    assert report["result"]["partition"] is None


def test_read_graph_conventions(tmp_path):
    g, f = read_graph(write(tmp_path, "n 3 directed\n0 1\n\n# tail\n2 2\n"))
    assert g.directed and f.as_lists() == [[1], [], [2]]
    g, f = read_graph(write(tmp_path, "n 3 undirected\n1 0\n"))
    assert g.edges == ((0, 1),)
    with pytest.raises(GraphFileError):
        read_graph(write(tmp_path, "n 2 directed\n0 1\n0 1\n"))


def test_output_is_deterministic():
    outs = {call("analyze", FIXTURES / "two_component.txt", "--json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "multifun", "primes", "--bound", "100", "--leaf", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "2 4 8 16 32 64\n"
