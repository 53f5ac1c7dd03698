import json

import pytest

from graphqec.cli import main
from graphqec.graph import format_graph, local_complement, ring, to_graph6
from graphqec.graphcode import GraphCode
from graphqec.pauli import from_string, same_group

from conftest import random_graphs_with_kernel

R5_EDGES = "5\n1 2\n2 3\n3 4\n4 5\n5 1\n"
T4_ADJ = "4 4\n0111\n1000\n1000\n1000\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_stabilizers(capsys, files):
    code, out, _ = run(capsys, "stabilizers", files("r5.txt", R5_EDGES))
    assert code == 0
    assert out.split() == ["XZIIZ", "ZXZII", "IZXZI", "IIZXZ", "ZIIZX"]
    code, out, _ = run(capsys, "stabilizers", files("t4.txt", T4_ADJ), "--format", "adj", "--json")
    assert json.loads(out) == ["XZZZ", "ZXII", "ZIXI", "ZIIX"]
    code, out, _ = run(capsys, "stabilizers", files("e3.txt", "3\n"))
    assert out.split() == ["XII", "IXI", "IIX"]
    code, out, _ = run(capsys, "stabilizers", files("z.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n"), "--zero-based")
    assert out.split()[0] == "XZIIZ"


def test_stabilizers_malformed(capsys, files):
    code, out, err = run(capsys, "stabilizers", files("bad.txt", "3\n1 q\n"))
    assert code == 2 and "line 2" in err and out == ""
    code, _, err = run(capsys, "stabilizers", "/nonexistent/graph.txt")
    assert code == 2 and "cannot read" in err
    code, _, _ = run(capsys, "stabilizers")
    assert code == 2
    code, _, _ = run(capsys, "stabilizers", files("r5.txt", R5_EDGES), "--format", "dot")
    assert code == 2


def test_derive_code_r5(capsys, files):
    g, b = files("r5.txt", R5_EDGES), files("b.txt", "11111\n")
    code, out, _ = run(capsys, "derive-code", g, "--b-file", b)
    assert code == 0
    assert "[[5,1,3]]" in out
    for s in ["YYZIZ", "XIXZZ", "XZZXI", "YZIZY"]:
        assert s in out
    code, out, _ = run(capsys, "derive-code", g, "--b-file", b, "--json")
    bundle = json.loads(out)
    assert bundle["parameters"] == "[[5,1,3]]" and bundle["d"] == 3
    assert bundle["stabilizers"] == ["YYZIZ", "XIXZZ", "XZZXI", "YZIZY"]
    assert GraphCode.from_json(out).stabilizers == tuple(from_string(s) for s in bundle["stabilizers"])
    # without a B file the kernel is derived and gives the same code
    code, out2, _ = run(capsys, "derive-code", g, "--json")
    assert json.loads(out2)["stabilizers"] == bundle["stabilizers"]


def test_derive_code_t4(capsys, files):
    g = files("t4.txt", T4_ADJ)
    b = files("b.txt", "2 4\n0110\n0011\n")
    code, out, _ = run(capsys, "derive-code", g, "--format", "adj", "--b-file", b, "--json")
    assert code == 0
    bundle = json.loads(out)
    assert bundle["parameters"] == "[[4,2,2]]"
    assert bundle["logical_z"] == ["IZZI", "IIZZ"]
    assert same_group([from_string(s) for s in bundle["stabilizers"]], [from_string("XZZZ"), from_string("ZXXX")])


def test_derive_code_errors(capsys, files):
    g = files("r5.txt", R5_EDGES)
    code, _, err = run(capsys, "derive-code", g, "--k", "2")
    assert code == 1 and "kernel dimension 1" in err
    code, _, err = run(capsys, "derive-code", g, "--b-file", files("b.txt", "11000\n"))
    assert code == 1 and "not valid" in err
    code, _, err = run(capsys, "derive-code", g, "--b-file", files("b2.txt", "11x11\n"))
    assert code == 2


def test_syndrome(capsys, files):
    _, bundle, _ = run(capsys, "derive-code", files("r5.txt", R5_EDGES), "--json")
    path = files("code.json", bundle)
    code, out, _ = run(capsys, "syndrome", path, "IIXII")
    assert code == 0 and out.strip() == "(-1, +1, -1, +1)"
    code, out, _ = run(capsys, "syndrome", path, "IIIII", "--json")
    assert json.loads(out) == [1, 1, 1, 1]
    code, _, err = run(capsys, "syndrome", path, "IIXI")
    assert code == 1 and err
    code, _, _ = run(capsys, "syndrome", path, "IIQII")
    assert code == 2
    code, _, err = run(capsys, "syndrome", files("junk.json", "{"), "IIXII")
    assert code == 1 and "malformed" in err


def test_lc_vertex(capsys, files):
    g = files("r5.txt", R5_EDGES)
    code, out, _ = run(capsys, "lc", g, "--vertex", "1")
    assert code == 0
    graph6, op = out.strip().splitlines()
    assert graph6 == to_graph6(local_complement(ring(5), 0))
    assert op == "sqrt(-iX)@1, sqrt(iZ)@2, sqrt(iZ)@5"
    code, out, _ = run(capsys, "lc", g, "--vertex", "1", "--json")
    payload = json.loads(out)
    assert [f["qubit"] for f in payload["operator"]] == [1, 2, 5]
    code, _, err = run(capsys, "lc", g, "--vertex", "6")
    assert code == 1 and "out of range" in err
    code, _, _ = run(capsys, "lc", g)
    assert code == 2


def test_lc_orbit(capsys, files):
    code, out, _ = run(capsys, "lc", files("e.txt", "4\n"), "--orbit", "--json")
    assert json.loads(out) == {"size": 1, "truncated": False, "graphs": ["C?"]}
    code, out, _ = run(capsys, "lc", files("r5.txt", R5_EDGES), "--orbit", "--max", "100", "--json")
    payload = json.loads(out)
    assert payload["size"] == 100 and payload["truncated"]
    assert to_graph6(local_complement(ring(5), 0)) in payload["graphs"]
    code, out, _ = run(capsys, "lc", files("r5b.txt", R5_EDGES), "--orbit", "--up-to-iso", "--json")
    assert json.loads(out)["size"] == 3


def test_verify(capsys, files):
    code, out, _ = run(capsys, "verify", files("r5.txt", R5_EDGES), "--k", "1", "--json")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    names = {c["name"] for c in report["checks"]}
    assert {"graph_state_stabilized", "superposition_identity", "encode_teleport"} <= names
    code, out, _ = run(capsys, "verify", files("t4.txt", T4_ADJ), "--format", "adj", "--k", "2")
    assert code == 0 and "all checks passed" in out
    g6 = random_graphs_with_kernel(1, (6, 6), seed=4)[0]
    code, _, _ = run(capsys, "verify", files("g6.txt", format_graph(g6, "graph6")), "--format", "graph6")
    assert code == 0


def test_verify_oversize(capsys, files):
    code, _, err = run(capsys, "verify", files("big.txt", format_graph(ring(16), "edgelist")))
    assert code == 1 and "14" in err


def test_deterministic(capsys, files):
    g = files("r5.txt", R5_EDGES)
    first = run(capsys, "verify", g, "--json", "--seed", "3")[1]
    assert run(capsys, "verify", g, "--json", "--seed", "3")[1] == first
