from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from thickness_lab.cli import run
from thickness_lab.construction import build_decomposition, dump_decomposition
from thickness_lab.graph import complete_graph, kn_pm, to_edge_list, to_graph6

DATA = Path(__file__).parent / "data"


def call(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_generate_matches_golden():
    code, out = call("generate", "--m", "3")
    assert code == 0
    assert out == (DATA / "k8_p3.json").read_text()


def test_generate_is_byte_deterministic():
    assert call("generate", "--m", "5") == call("generate", "--m", "5")


@pytest.mark.parametrize("m", range(1, 65))
def test_generate_verify_roundtrip(tmp_path, m):
    f = tmp_path / "d.json"
    assert call("generate", "--m", str(m), "--out", str(f)) == (0, "")
    code, out = call("verify", "--file", str(f))
    assert code == 0
    report = json.loads(out)
    assert report["valid"] and report["thickness_upper_witnessed"] == 2


def test_generate_other_formats():
    code, dot = call("generate", "--m", "2", "--format", "dot")
    assert code == 0 and dot.startswith("graph K8xP2 {")
    code, g6 = call("generate", "--m", "2", "--format", "graph6")
    assert code == 0 and len(g6.splitlines()) == 2


def test_verify_invalid(tmp_path):
    data = build_decomposition(2).to_dict()
    data["parts"][0] = data["parts"][0][1:]
    f = tmp_path / "bad.json"
    f.write_text(dump_decomposition(data))
    code, out = call("verify", "--file", str(f))
    assert code == 1 and json.loads(out)["missing_edges"]


def test_verify_part_limit(tmp_path):
    data = build_decomposition(1).to_dict()
    data["parts"] = [data["parts"][0][:4], data["parts"][0][4:], data["parts"][1]]
    f = tmp_path / "three.json"
    f.write_text(json.dumps(data))
    assert call("verify", "--file", str(f))[0] == 1
    assert call("verify", "--file", str(f), "--k", "3")[0] == 0


def test_bounds():
    code, out = call("bounds", "--n", "10", "--m", "2")
    d = json.loads(out)
    assert code == 0 and d["lower"] == d["upper"] == 3
    assert d["euler_lower_bound"] == 3 and d["face_upper_bound"] == 63
    d = json.loads(call("bounds", "--n", "15", "--m", "3")[1])
    assert (d["lower"], d["upper"], d["exact"]) == (3, 4, False)
    assert json.loads(call("bounds", "--n", "9")[1])["upper"] == 3


def test_solve_formats(tmp_path):
    g6 = tmp_path / "k5.g6"
    g6.write_text(to_graph6(complete_graph(5)) + "\n")
    el = tmp_path / "k4p2.txt"
    el.write_text(to_edge_list(kn_pm(4, 2), header=True))
    for f in (g6, el):
        code, out = call("solve", "--file", str(f))
        assert code == 0 and json.loads(out)["thickness"] == 2
    dec = tmp_path / "dec.json"
    dec.write_text(json.dumps({"n": 4, "m": 2, "parts": []}))
    assert json.loads(call("solve", "--file", str(dec))[1])["thickness"] == 2


def test_solve_witness_verifies(tmp_path):
    g6 = tmp_path / "k6.g6"
    g6.write_text(to_graph6(complete_graph(6)))
    witness = json.loads(call("solve", "--file", str(g6))[1])["witness"]
    f = tmp_path / "w.json"
    f.write_text(json.dumps(witness))
    assert call("verify", "--file", str(f))[0] == 0


def test_solve_refusal(tmp_path):
    f = tmp_path / "k10.g6"
    f.write_text(to_graph6(complete_graph(10)))
    code, out = call("solve", "--file", str(f))
    assert code == 3 and json.loads(out)["refused"]


def test_gadgets():
    code, out = call("gadgets", "--kind", "h2")
    d = json.loads(out)
    assert code == 0 and list(d) == ["H2"] and len(d["H2"]) == 12
    assert set(json.loads(call("gadgets")[1])) == {"H1", "H2", "I1", "I2"}


def test_census_k8_p2(tmp_path):
    f = tmp_path / "d.json"
    call("generate", "--m", "2", "--out", str(f))
    code, out = call("census", "--file", str(f))
    d = json.loads(out)
    assert code == 0 and d["ok"] and d["face_bound"] == 40


def test_census_requires_p2(tmp_path):
    f = tmp_path / "d.json"
    call("generate", "--m", "3", "--out", str(f))
    assert call("census", "--file", str(f))[0] == 2


def test_census_normalize(tmp_path):
    g6 = tmp_path / "k4p2.g6"
    g6.write_text(to_graph6(kn_pm(4, 2)))
    a, b = json.loads(call("solve", "--file", str(g6))[1])["witness"]["parts"]
    f = tmp_path / "single.json"
    f.write_text(json.dumps({"n": 4, "m": 2, "parts": [a, b[1:], b[:1]]}))
    assert call("verify", "--file", str(f), "--k", "3")[0] == 0
    code, out = call("census", "--file", str(f))
    assert code == 1 and "normalization" in json.loads(out)["error"]
    code, out = call("census", "--file", str(f), "--normalize")
    assert code == 0 and json.loads(out)["ok"]


@pytest.mark.parametrize(
    "argv",
    [[], ["generate"], ["generate", "--m", "0"], ["bounds", "--n", "0"], ["nope"],
     ["verify", "--file", "/nonexistent.json"], ["gadgets", "--kind", "X9"]],
)
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "thickness_lab", "bounds", "--n", "8", "--m", "5"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and json.loads(out.stdout)["upper"] == 2
