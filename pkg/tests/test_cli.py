import io
import subprocess
import sys

import pytest

from supercyclic import (
    Bigraph,
    check_condition,
    complete_bipartite,
    construct_g3,
    enumerate_bigraphs,
    iter_records,
    serialize,
)
from supercyclic.cli import main

C6 = Bigraph(3, 3, [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (1, 3)])
K33 = complete_bipartite(3, 3)
TRIANGLE_H = "p hgraph 3 3\ns 1 2\ns 2 3\ns 1 3\n"


def run(monkeypatch, capsys, argv, stdin_text=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_check_pass_human(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["check"], serialize(C6))
    assert code == 0
    assert "neighborhood condition: PASS" in out
    assert "delta >= max(n,(m+2)/2)" in out


def test_check_fail_human(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["check"],
                       serialize(construct_g3(1, 1, 1, 3)))
    assert code == 1
    assert "FAIL" in out and "|N^(X{1,2,3})| < 3" in out


def test_check_machine_stream(monkeypatch, capsys):
    text = serialize(C6) + "\n" + serialize(construct_g3(1, 1, 1, 3))
    code, out, _ = run(monkeypatch, capsys,
                       ["check", "--format", "machine"], text)
    assert code == 1
    blocks = out.strip().split("\n\n")
    assert len(blocks) == 2
    assert "graph=1\npassed=true\nmode=full" in blocks[0]
    assert "passed=false" in blocks[1]
    assert "size_witness=X{1,2,3}" in blocks[1]
    assert "quarter_bound=false" in blocks[1]


def test_check_as_hypergraph(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["check", "--as-hypergraph"], TRIANGLE_H)
    assert code == 0 and "PASS" in out
    # records of the wrong kind are usage errors either way
    code, _, err = run(monkeypatch, capsys,
                       ["check", "--as-hypergraph"], serialize(C6))
    assert code == 2 and "error:" in err
    code, _, err = run(monkeypatch, capsys, ["check"], TRIANGLE_H)
    assert code == 2 and "incidence" in err


def test_check_rejects_malformed_input(monkeypatch, capsys):
    code, _, err = run(monkeypatch, capsys, ["check"],
                       "p bigraph 2 2\ne 1 1\ne 1 1\n")
    assert code == 2 and "duplicate edge" in err


def test_cycle_found_and_absent(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["cycle", "--base", "1,2,3"],
                       serialize(C6))
    assert code == 0 and out == "graph 1: x1 y1 x2 y2 x3 y3\n"
    code, out, _ = run(monkeypatch, capsys, ["cycle", "--base", "1,3,4"],
                       serialize(construct_g3(2, 1, 1, 3)))
    assert code == 1 and out == "graph 1: ABSENT\n"
    code, _, err = run(monkeypatch, capsys, ["cycle", "--base", "a,b"],
                       serialize(C6))
    assert code == 2


def test_classify_human(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys, ["classify"], serialize(K33))
    assert code == 1
    assert "critical=false" in out and "reason=" in out


def test_classify_machine(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["classify", "--format", "machine"], serialize(K33))
    assert code == 1
    assert out.startswith("graph=1\ncritical=false\nreason=")


def test_analyze_successors_and_crossings(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["analyze", "--cycle", "1,1,2,2,3,3", "--pair", "1,2"],
                       serialize(K33))
    assert code == 0
    assert "cycle: x1 y1 x2 y2 x3 y3" in out
    assert "  x1: x+ = x2  x- = x3  y+ = y1  y- = y3" in out
    assert "crossings of (x1, x2): 1 (at x3)" in out
    assert "holds" in out


def test_analyze_fan(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["analyze", "--cycle", "x1,y1,x2,y2", "--fan-root", "3"],
                       serialize(K33))
    assert code == 0
    assert "fan from x3: size 3, 5 vertices" in out
    assert "  path: x3 y1" in out and "  path: x3 y3 x1" in out


def test_analyze_input_errors(monkeypatch, capsys):
    two = serialize(K33) + "\n" + serialize(C6)
    assert run(monkeypatch, capsys,
               ["analyze", "--cycle", "1,1,2,2"], two)[0] == 2
    assert run(monkeypatch, capsys,
               ["analyze", "--cycle", "1,1,2"], serialize(K33))[0] == 2
    assert run(monkeypatch, capsys,
               ["analyze", "--cycle", "y1,x1,y2,x2"], serialize(K33))[0] == 2
    # claimed cycle edge missing from the graph
    assert run(monkeypatch, capsys,
               ["analyze", "--cycle", "1,1,2,2"], serialize(C6))[0] == 2


def test_gen_g3_roundtrip(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["gen", "g3", "--n", "2,1,1", "--delta", "3"])
    assert code == 0
    assert list(iter_records(out)) == [construct_g3(2, 1, 1, 3)]
    assert run(monkeypatch, capsys,
               ["gen", "g3", "--n", "2,1", "--delta", "3"])[0] == 2
    assert run(monkeypatch, capsys,
               ["gen", "g3", "--n", "1,2,1", "--delta", "3"])[0] == 2


def test_gen_complete(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["gen", "complete", "--nx", "3", "--ny", "3"])
    assert code == 0 and out == serialize(K33)


def test_gen_enum_stream(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["gen", "enum", "--nx", "2", "--ny-max", "2"])
    assert code == 0
    assert list(iter_records(out)) == list(enumerate_bigraphs(2, 2))

    code, out, _ = run(monkeypatch, capsys,
                       ["gen", "enum", "--nx", "3", "--ny-max", "4",
                        "--filter", "cond1"])
    got = list(iter_records(out))
    assert len(got) == 21
    assert all(check_condition(g).passed for g in got)


def test_gen_random_deterministic(monkeypatch, capsys):
    argv = ["gen", "random", "--nx", "4", "--ny", "4", "--seed", "5",
            "--count", "3"]
    _, out1, _ = run(monkeypatch, capsys, argv)
    _, out2, _ = run(monkeypatch, capsys, argv)
    assert out1 == out2
    assert len(list(iter_records(out1))) == 3


def test_verify_machine_golden(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["verify", "kcyclic", "--nx", "3", "--ny-max", "3",
                        "--k", "3", "--format", "machine"])
    assert code == 0
    assert out == (
        "report=verify-k-cyclic\n"
        "param.nx=3\n"
        "param.ny_max=3\n"
        "param.k=3\n"
        "graphs_examined=54\n"
        "graphs_checked=4\n"
        "deterministic=true\n"
        "violations=0\n"
        "result=confirmed\n"
    )


def test_verify_human(monkeypatch, capsys):
    code, out, _ = run(monkeypatch, capsys,
                       ["verify", "degree", "--nx", "3", "--ny-max", "3"])
    assert code == 0
    assert "result: CONFIRMED" in out and "elapsed:" in out


def test_hunt_cli_matches_library(monkeypatch, capsys):
    from supercyclic import HuntConfig, hunt_counterexample
    code, out, _ = run(monkeypatch, capsys,
                       ["hunt", "--nx", "4", "--ny-max", "4", "--random",
                        "--seed", "3", "--trials", "10",
                        "--format", "machine"])
    assert code == 0
    want = hunt_counterexample(HuntConfig(4, 4, mode="random", seed=3,
                                          trials=10))
    assert out == want.to_machine()


def test_checkpoint_env_dir(monkeypatch, capsys, tmp_path):
    monkeypatch.setenv("SUPERCYCLIC_CHECKPOINT_DIR", str(tmp_path))
    argv = ["verify", "kcyclic", "--nx", "3", "--ny-max", "3", "--k", "3",
            "--checkpoint", "run.ckpt", "--checkpoint-every", "10",
            "--format", "machine"]
    code, out, _ = run(monkeypatch, capsys, argv)
    assert code == 0
    assert (tmp_path / "run.ckpt").exists()
    # resume from the completed file, byte-identical report
    code2, out2, _ = run(monkeypatch, capsys, argv)
    assert code2 == 0 and out2 == out


def test_pipeline_through_real_processes():
    gen = f"{sys.executable} -m supercyclic.cli gen g3 --n 2,1,1 --delta 3"
    check = f"{sys.executable} -m supercyclic.cli check"
    proc = subprocess.run(f"{gen} | {check}", shell=True,
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert "FAIL" in proc.stdout
