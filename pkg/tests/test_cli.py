import io
import json
import subprocess
import sys

import pytest

from covergadget.cli import main
from covergadget.graph import path_graph
from covergadget.harness import example_graphs


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


P3 = path_graph(3).to_json()


def test_example_gadget_refuted(cli, tmp_path):
    G, k = example_graphs()["bipartite-5"]
    code, gad = cli(["gadget", "--k", ",".join(map(str, k))], G.to_json())
    assert code == 0
    out_file = tmp_path / "cert.json"
    code, out = cli(["vd", "--certificate", str(out_file)], gad)
    assert code == 1
    data = json.loads(out)
    assert data["vertex_decomposable"] is False
    assert {"vertex", "failure", "witness"} <= set(data["refutation"]["attempts"][0])
    assert json.loads(out_file.read_text()) == data


def test_vd_on_plain_graph_and_guided(cli):
    code, out = cli(["vd"], P3)
    assert code == 0 and json.loads(out)["vertex_decomposable"]
    code, gad = cli(["gadget", "--uniform", "2"], P3)
    code, out = cli(["vd", "--guided", "tree"], gad)
    assert code == 0 and json.loads(out)["certificate"]["vertex"] in {"x2@1", "x1@1", "x3@1"}
    code, _ = cli(["vd", "--guided", "tree"], P3)
    assert code == 2


def test_guided_unicyclic(cli):
    G = json.dumps({"vertices": ["x1", "x2", "x3", "x4", "y"],
                    "edges": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x1", "x4"], ["x1", "y"]]})
    code, gad = cli(["gadget", "--uniform", "2"], G)
    code, out = cli(["vd", "--guided", "unicyclic"], gad)
    assert code == 0 and json.loads(out)["certificate"]["vertex"] == "x1@1"


def test_ideal_pipeline(cli):
    code, J = cli(["cover-ideal"], P3)
    assert json.loads(J) == {"vars": ["x1", "x2", "x3"], "gens": [{"x2": 1}, {"x1": 1, "x3": 1}]}
    assert cli(["reg"], J) == (0, "2\n")
    code, J2 = cli(["power", "--s", "2"], J)
    assert cli(["reg"], J2) == (0, "4\n")
    assert cli(["reg", "--method", "hochster"], J2) == (0, "4\n")
    code, sym = cli(["symbolic", "--s", "2"], P3)
    assert json.loads(sym) == json.loads(J2)
    code, betti = cli(["betti"], J)
    assert json.loads(betti) == {"beta": [[0, 1, 1], [0, 2, 1], [1, 3, 1]]}
    code, text = cli(["betti", "--text"], J)
    assert "total:" in text
    code, pol = cli(["polarize"], J2)
    assert "x1@2" in json.loads(pol)["vars"]
    code, comp = cli(["component", "--j", "2"], J)
    assert len(json.loads(comp)["gens"]) == 4
    code, edges = cli(["edge-ideal"], P3)
    assert len(json.loads(edges)["gens"]) == 2


def test_refutations_exit_one(cli):
    C4 = json.dumps({"vertices": ["x1", "x2", "x3", "x4"],
                     "edges": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x1", "x4"]]})
    code, J = cli(["cover-ideal"], C4)
    assert cli(["lq"], J)[0] == 1
    code, out = cli(["cwl"], J)
    assert code == 1 and json.loads(out) == {"componentwise_linear": False, "degrees": {"2": False}}
    assert cli(["vd"], C4)[0] == 1
    code, J3 = cli(["cover-ideal"], P3)
    code, out = cli(["lq"], J3)
    assert code == 0 and json.loads(out)["order"] == [{"x2": 1}, {"x1": 1, "x3": 1}]


def test_usage_errors(cli):
    assert cli(["nonsense"])[0] == 2
    assert cli(["reg"], "not json")[0] == 2
    assert cli(["gadget", "--k", "1"], P3)[0] == 2
    assert cli(["gadget"], P3)[0] == 2
    assert cli(["reg"], json.dumps({"vars": ["x"], "gens": []}))[0] == 2
    assert cli(["verify", "bogus"])[0] == 2
    assert cli(["power", "--s", "0"], json.dumps({"vars": ["x"], "gens": [{"x": 1}]}))[0] == 2


def test_verify(cli):
    code, out = cli(["verify", "counterexamples"])
    assert code == 0 and json.loads(out)[0]["passed"]
    code, out = cli(["verify", "tree-powers", "--nmax", "3", "--kmax", "1"])
    assert code == 0 and json.loads(out)[0]["params"]["n_max"] == 3


def test_console_script_runs():
    proc = subprocess.run(["covergadget", "reg"], input=json.dumps(
        {"vars": ["x1", "x2"], "gens": [{"x1": 1, "x2": 1}]}), capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "2"
