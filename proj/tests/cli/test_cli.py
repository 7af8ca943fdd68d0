import json
import os
import subprocess

import pytest

CLI = os.environ.get("ARROWING_CLI", "arrowing")
DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def run(*args, code=0):
    p = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert p.returncode == code, p.stderr
    return json.loads(p.stdout) if p.stdout.strip() else None


def test_graph_queries():
    assert run("mepl", "--graph", "c4") == {"mepl": 2}
    assert run("mepl", "--graph", "k1_3") == {"mepl": "infinite"}
    assert run("epl", "--graph", "k4", "--first", "0,1", "--second", "2,3") == {"epl": 4}
    assert run("copies", "--graph", os.path.join(DATA, "k4_tail.txt"), "--h", "k3")["copies"] == 4
    c = run("connectivity", "--graph", "c5", "--k", "2")
    assert c["connected"] and c["k_connected"]


def test_arrows_and_certificates(tmp_path):
    k5 = run("p3k3", "--graph", "k5")
    assert (k5["arrows"], k5["t"], k5["matching_weight"]) == (True, 10, 6)
    cert = tmp_path / "c.json"
    r = run("arrows", "--graph", "k5", "--f", "k3", "--h", "k3", "--certificate", str(cert))
    assert r["arrows"] is False
    assert run("certify", "--coloring", str(cert), "--f", "k3", "--h", "k3", "--graph", "k5")["good"]
    assert run("certify", "--coloring", str(cert), "--f", "p3", "--h", "k3")["good"] is False
    assert run("arrows", "--graph", "k6", "--f", "k3", "--h", "k3", "--budget", "1", code=2)["arrows"] is None


def test_prune_and_tk():
    p = run("prune", "--graph", os.path.join(DATA, "k4_tail.txt"), "--h", "k3")
    assert p["removed"] == [[3, 4]]
    assert run("tk-check", "--graph", "k5", "--n", "3")["agreement"] == "agree"


def test_errors():
    assert run("mepl", "--graph", "nonsense", code=1)["error"] == "SYNTAX"
    run("mepl", code=1)
    bad = run("oracle", "--formula", os.path.join(DATA, "phi_repeated_variable.txt"), code=1)
    assert bad["error"] == "CONSTRAINT_VIOLATION"
    assert run("reduce", "--formula", os.path.join(DATA, "phi_example.txt"), "--h", "k4",
               "--archive", "/nonexistent-archive", code=1)["error"] == "MISSING_GADGET"


def test_forge_reduce_certify(tmp_path):
    archive = str(tmp_path / "gadgets")
    found = run("gadget-find", "--h", "k4", "--archive", archive)
    assert all(g["verified"] for g in found["gadgets"])
    assert len(found["written"]) == 4
    again = run("gadget-find", "--h", "k4", "--archive", archive)
    assert again["written"] == []
    v = run("gadget-verify", "--file", os.path.join(archive, "p3__k4__clause_gadget.json"))
    assert v["verified"] and v["digest"] == v["stored_digest"]

    cert, graph = tmp_path / "gc.json", tmp_path / "gphi.txt"
    r = run("reduce", "--formula", os.path.join(DATA, "phi_example.txt"), "--h", "k4", "--archive", archive,
            "--certificate", str(cert), "--graph-out", str(graph))
    assert r["satisfiable"] and r["round_trip_satisfies"] and r["copies_reconcile"] and r["vertex_count_matches"]
    assert run("certify", "--coloring", str(cert), "--h", "k4", "--graph", str(graph))["good"]


def test_generated_formulas(tmp_path):
    out = run("gen-formulas", "--n", "6", "--count", "3", "--seed", "9", "--dir", str(tmp_path))
    assert len(out["formulas"]) == 3
    for i in range(3):
        assert run("oracle", "--formula", str(tmp_path / f"phi_{i}.txt"))["satisfiable"] in (True, False)


def test_sweep_is_deterministic_across_jobs():
    serial = run("sweep", "--check", "p3k3", "--max-n", "6", "--jobs", "1")
    parallel = run("sweep", "--check", "p3k3", "--max-n", "6", "--jobs", "4")
    assert serial == parallel
    assert serial["agree"] == serial["graphs"] == 143
