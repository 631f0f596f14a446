import json

import pytest

from hlcluster.cli import run


def out(capsys, argv):
    code = run(argv)
    return code, capsys.readouterr()


def test_quiver_dot(capsys):
    code, r = out(capsys, ["quiver", "--xi", "0,1", "--format", "dot"])
    assert code == 0
    assert r.out.count("shape=") == 4 and r.out.count("->") == 3


def test_cluster_var_text(capsys):
    code, r = out(capsys, ["cluster-var", "--xi", "0,1", "--root", "1,2"])
    assert code == 0
    assert r.out.strip() == "(x1*f1 + x2*f2 + f1*f2)*x1^-1*x2^-1"


def test_cluster_var_json(capsys):
    code, r = out(capsys, ["cluster-var", "--xi", "0,1", "--neg", "2", "--format", "json"])
    data = json.loads(r.out)
    assert code == 0 and data["root"] == {"neg": 2}


def test_verify_passes(capsys):
    code, r = out(capsys, ["verify", "--suite", "closedform", "--max-n", "4"])
    assert code == 0 and "PASS" in r.out


def test_tensor_json(capsys):
    code, r = out(capsys, ["tensor", "--xi", "0,1", "--p1", "1:-", "--p2", "2:+", "--format", "json"])
    assert code == 0 and json.loads(r.out)["verdict"] == "reducible"


def test_compat(capsys):
    code, r = out(capsys, ["compat", "--xi", "0,1", "--r1", "1,1", "--r2", "2,2"])
    assert code == 0 and r.out.strip() == "not compatible"


def test_iota_roundtrip(capsys):
    run(["iota", "--xi", "0,1,0", "--root", "1,3", "--format", "json"])
    elem = json.loads(capsys.readouterr().out)["element"]
    text = ",".join(f"{g['node']}:{g['sign']}" for g in elem)
    code, r = out(capsys, ["iota", "--xi", "0,1,0", "--inverse", text])
    assert code == 0 and r.out.strip() == "a1,3"


def test_gamma_primed(capsys):
    code, r = out(capsys, ["gamma", "--xi", "0,1", "--i", "1", "--j", "2", "--primed"])
    assert code == 0 and len(r.out.strip().splitlines()) == 3


def test_enumerate(capsys):
    code, r = out(capsys, ["enumerate-xi", "--n", "3", "--format", "json"])
    assert code == 0 and len(json.loads(r.out)) == 4


def test_exchange_graph(capsys):
    code, r = out(capsys, ["exchange-graph", "--xi", "0,1,0"])
    assert code == 0 and r.out.startswith("14 clusters")


@pytest.mark.parametrize(
    "argv",
    [
        ["quiver", "--xi", "0,2"],
        ["quiver", "--n", "3", "--xi", "0,1"],
        ["cluster-var", "--xi", "0,1"],
        ["cluster-var", "--xi", "0,1", "--root", "1,5"],
        ["iota", "--xi", "0,1", "--inverse", "1:+,1:-"],
        ["tensor", "--xi", "0,1", "--p1", "garbage", "--p2", "1:+"],
        ["mutate", "--xi", "0,1", "--at", "1'"],
        ["no-such-command"],
    ],
)
def test_malformed_input_exit_two(capsys, argv):
    assert run(argv) == 2
