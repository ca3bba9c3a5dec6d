import json

import pytest

import app


def run(capsys, *argv):
    code = app.main(list(argv))
    return code, capsys.readouterr().out


def test_get_command():
    assert app.get_command("verify").NAME == "verify"
    assert app.get_command("cluster-vars").NAME == "cluster-vars"
    assert app.get_command("download") is None


def test_enumerate_text(capsys):
    code, out = run(capsys, "enumerate", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["# assoc 0.1.0 enumerate n=3", "14 triangulations, 21 edges"]


def test_enumerate_json(capsys):
    code, out = run(capsys, "enumerate", "--n", "4", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["triangulations"] == 42 and data["edges"] == 84
    assert data["version"] == app.VERSION


def test_graph_dot(capsys):
    code, out = run(capsys, "graph", "--n", "2")
    assert code == 0
    assert out.startswith("digraph exchange_n2 {")
    assert '0 -> 1 [label="1,2,3,4"];' in out
    assert out.count("->") == 5


def test_graph_json(capsys):
    code, out = run(capsys, "graph", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["nodes"][0] == [[1, 3], [1, 4]]
    assert len(data["edges"]) == 5
    assert data["five_cycles"] == [{"nodes": [0, 1, 3, 4, 2], "label": [1, 2, 3, 4, 5]}]


def test_cluster_vars_single_diagonal(capsys):
    code, out = run(capsys, "cluster-vars", "--n", "2", "--diagonal", "2,4")
    assert code == 0
    assert "(2,4) = 1 * x1^-1 x2^1 x4^1 + 1 * x1^-1 x3^1 x5^1" in out.splitlines()


def test_cluster_vars_json(capsys):
    code, out = run(capsys, "cluster-vars", "--n", "3", "--format", "json")
    assert code == 0
    assert len(json.loads(out)["variables"]) == 9


@pytest.mark.parametrize("value", ["1,2", "1,9", "2", "a,b", "1,2,3"])
def test_cluster_vars_bad_diagonal_is_a_usage_error(capsys, value):
    code, out = run(capsys, "cluster-vars", "--n", "2", "--diagonal", value)
    assert code == 2
    assert out == ""


def test_cycles(capsys):
    code, out = run(capsys, "cycles", "--n", "3")
    assert code == 0
    assert "3 geodesic 4-cycles, 6 geodesic 5-cycles, 6 labels" in out


def test_homology_csv(capsys):
    code, out = run(capsys, "homology", "--n", "3", "--format", "csv")
    assert code == 0
    assert out == f"version,n,rank,torsion,four_cycles,five_cycles,label_classes\n{app.VERSION},3,5,,3,6,6\n"


def test_homology_text(capsys):
    code, out = run(capsys, "homology", "--n", "4")
    assert code == 0
    assert "H1 rank 15 (C(6,4) = 15)" in out
    assert "torsion none" in out


def test_relations(capsys):
    code, out = run(capsys, "relations", "--n", "2")
    assert code == 0
    assert "1 pentagonal relations" in out
    assert "  +X1234 -X1235 +X1245 -X1345 +X2345" in out
    assert "ker theta: rank 1" in out
    assert "E(A) basis: 4 pairs" in out


def test_recurrence(capsys):
    code, out = run(capsys, "recurrence")
    assert code == 0
    assert "f1 = 1 * x1^1" in out
    assert "at x1 = x2 = 1: 1, 1, 2, 3, 2, 1, 1" in out
    assert out.rstrip().endswith("period 5 confirmed")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_verify_passes(capsys, n):
    code, out = run(capsys, "verify", "--n", str(n))
    assert code == 0, out
    assert out.rstrip().endswith("all checks passed")
    assert "❌" not in out


def test_verify_summary_line(capsys):
    code, out = run(capsys, "verify", "--n", "3", "--theorem", "3")
    assert code == 0
    assert "kernel rank 7, E rank 8, H1 rank 5" in out


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "--n", "4", "--theorem", "4.4", "--seed", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["verified"] is True
    assert data["kernel_rank"] == 22 and data["E_rank"] == 13 and data["h1_rank"] == 15
    assert all(c["passed"] for c in data["checks"]["4.4"])


def test_output_file(capsys, tmp_path):
    code, out = run(capsys, "enumerate", "--n", "2", "--output", "census.txt")
    assert code == 0
    assert out == ""
    assert (tmp_path / "census.txt").read_text().endswith("5 triangulations, 5 edges\n")


@pytest.mark.parametrize("argv", [
    [],
    ["download"],
    ["enumerate"],
    ["enumerate", "--n", "x"],
    ["graph", "--n", "2", "--format", "csv"],
    ["verify", "--n", "2", "--theorem", "5"],
])
def test_usage_errors(capsys, argv):
    assert app.main(argv) == 2


def test_version(capsys):
    assert app.main(["--version"]) == 0
    assert app.VERSION in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["enumerate", "--n", "0"],
    ["enumerate", "--n", "4", "--max-nodes", "41"],
    ["enumerate", "--n", "8"],
])
def test_resource_limits(capsys, argv):
    assert app.main(argv) == 3


def test_heavy_commands_respect_max_n(capsys, monkeypatch):
    monkeypatch.setenv("ASSOC_MAX_N", "3")
    assert app.main(["homology", "--n", "4"]) == 3
    assert app.main(["enumerate", "--n", "4"]) == 0


def test_verify_fails_on_a_wrong_kernel_rank(capsys, monkeypatch):
    monkeypatch.setattr("commands.verify.expected_kernel_rank", lambda n: -1)
    code, out = run(capsys, "verify", "--n", "2", "--theorem", "1")
    assert code == 1
    assert "❌ ker theta rank -1" in out
