import json
import os
import subprocess
import sys

import pytest

from domdelay.cli import main
from domdelay.graph import parse_graph, serialize_dimacs
from conftest import path_graph

P6_DIMACS = "p edge 6 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n"
STAR3_DIMACS = "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n"


@pytest.fixture
def p6_file(tmp_path):
    path = tmp_path / "p6.graph"
    path.write_text(P6_DIMACS)
    return str(path)


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "star3.graph"
    path.write_text(STAR3_DIMACS)
    return str(path)


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_classify_output(star_file, capsys):
    code, out = run_cli(["classify", star_file], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "IR: 2 3 4"
    assert lines[1] == "RN: 1"


def test_enum_dom_counts(p6_file, star_file, capsys):
    code, out = run_cli(["enum-dom", "--mode", "p7", "--verify-class", p6_file], capsys)
    assert code == 0
    lines = [l for l in out.splitlines()]
    assert len(lines) == 7
    assert "2 5" in lines  # the set {1, 4}, printed 1-indexed
    code, out = run_cli(["enum-dom", star_file], capsys)
    assert sorted(out.splitlines()) == ["1", "2 3 4"]


def test_enum_dom_deterministic(p6_file, capsys):
    _, a = run_cli(["enum-dom", p6_file], capsys)
    _, b = run_cli(["enum-dom", p6_file], capsys)
    assert a == b


def test_pk_budget_flag(p6_file, capsys):
    code, out = run_cli(
        ["enum-dom", "--verify-class", "--pk-budget", "100000", p6_file], capsys
    )
    assert code == 0 and len(out.splitlines()) == 7
    # a tiny budget makes the exact check give up: budget exhaustion, not
    # a class verdict
    code, _ = run_cli(
        ["enum-dom", "--verify-class", "--pk-budget", "1", p6_file], capsys
    )
    assert code == 3


def test_enum_rn(p6_file, capsys):
    code, out = run_cli(["enum-rn", p6_file], capsys)
    assert code == 0
    got = set(out.splitlines())
    assert got == {"", "2", "5", "2 5"}


def test_limit_and_count_only(p6_file, capsys):
    code, out = run_cli(["enum-dom", "--limit", "3", p6_file], capsys)
    assert code == 0
    assert len(out.splitlines()) == 3
    code, out = run_cli(["enum-dom", "--count-only", p6_file], capsys)
    assert out.strip() == "7"


def test_enum_dir(p6_file, capsys):
    code, out = run_cli(["enum-dir", "--set", "2", p6_file], capsys)
    assert code == 0
    assert out.splitlines() == ["3 6", "4 6"]


def test_oracle_dom(p6_file, capsys):
    code, out = run_cli(["oracle", "dom", p6_file, "--count-only"], capsys)
    assert code == 0
    assert out.strip() == "7"


def test_oracle_drn_member(star_file, capsys):
    code, out = run_cli(
        ["oracle", "drn-member", star_file, "--set", "auto-rn"], capsys
    )
    assert code == 0
    assert out.strip() == "YES"


def test_oracle_iep(p6_file, capsys):
    code, out = run_cli(
        ["oracle", "iep", p6_file, "--set", "2", "--component", "2"], capsys
    )
    assert code == 0
    assert out.strip() == "YES"


def test_exit_code_disconnected(tmp_path, capsys):
    path = tmp_path / "disc.graph"
    path.write_text("p edge 4 2\ne 1 2\ne 3 4\n")
    code, _ = run_cli(["enum-dom", str(path)], capsys)
    assert code == 2


def test_exit_code_class_failure(tmp_path, capsys):
    path = tmp_path / "c4.graph"
    path.write_text("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    code, _ = run_cli(["enum-dom", "--verify-class", str(path)], capsys)
    assert code == 2


def test_exit_code_malformed(tmp_path, capsys):
    path = tmp_path / "bad.graph"
    path.write_text("p edge 2 1\ne 1 1\n")
    code, _ = run_cli(["classify", str(path)], capsys)
    assert code == 1


def test_exit_code_size_limit(tmp_path, capsys):
    edges = [(i, i + 1) for i in range(17)]
    path = tmp_path / "big.graph"
    path.write_text(serialize_dimacs(path_graph(18)))
    code, _ = run_cli(["oracle", "dom", str(path)], capsys)
    assert code == 3


def test_gen_writes_parsable_graphs(tmp_path, capsys):
    out_dir = tmp_path / "corpus"
    out_dir.mkdir()
    code, _ = run_cli(
        [
            "gen",
            "--family",
            "pk-free",
            "--n",
            "12",
            "--k",
            "7",
            "--count",
            "3",
            "--seed",
            "9",
            "-o",
            str(out_dir),
        ],
        capsys,
    )
    assert code == 0
    files = sorted(os.listdir(out_dir))
    assert len(files) == 3
    for f in files:
        g = parse_graph((out_dir / f).read_text())
        assert g.n == 12


def test_gen_seed_env_var(tmp_path, capsys, monkeypatch):
    out_a = tmp_path / "a.graph"
    out_b = tmp_path / "b.graph"
    monkeypatch.setenv("DOMDELAY_SEED", "31")
    run_cli(["gen", "--n", "10", "-o", str(out_a)], capsys)
    run_cli(["gen", "--n", "10", "--seed", "31", "-o", str(out_b)], capsys)
    assert out_a.read_text() == out_b.read_text()


def test_reduce_3sat_roundtrip(tmp_path, capsys):
    cnf = tmp_path / "phi.cnf"
    cnf.write_text("p cnf 3 3\n1 2 3 0\n-1 2 -3 0\n1 -2 3 0\n")
    gout = tmp_path / "g.graph"
    mout = tmp_path / "roles.jsonl"
    code, out = run_cli(
        ["reduce-3sat", str(cnf), "-o", str(gout), "--map", str(mout)], capsys
    )
    assert code == 0
    g = parse_graph(gout.read_text())
    assert g.n == 39
    roles = [json.loads(l) for l in mout.read_text().splitlines()]
    assert len(roles) == 39
    # gadget membership matches satisfiability
    code, out = run_cli(
        ["oracle", "drn-member", str(gout), "--set", "auto-rn"], capsys
    )
    assert out.strip() == "YES"


def test_bench_csv(p6_file, capsys):
    code = main(["bench", p6_file, "--mode", "p7", "--limit", "100"])
    captured = capsys.readouterr()
    lines = captured.out.splitlines()
    assert lines[0] == "solution_index,size,delay_ns"
    assert len(lines) == 8  # header + 7 solutions
    for i, line in enumerate(lines[1:], start=1):
        idx, size, delay = line.split(",")
        assert int(idx) == i
        assert int(size) >= 1
        assert int(delay) >= 0
    assert "max_delay_ns=" in captured.err


def test_bench_single_vertex(tmp_path, capsys):
    path = tmp_path / "k1.graph"
    path.write_text("p edge 1 0\n")
    code = main(["bench", str(path)])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out.splitlines() == ["solution_index,size,delay_ns", "1,1,0"]


def test_cli_as_module(p6_file):
    proc = subprocess.run(
        [sys.executable, "-m", "domdelay", "enum-dom", "--count-only", p6_file],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "7"
