import subprocess
import sys

import pytest

from ramseykit.cli import main
from ramseykit.coloring import parse_coloring_matrix
from ramseykit.graph6 import emit_graph6
from ramseykit.graphs import Graph


def run_cli(args, stdin=""):
    proc = subprocess.run(
        [sys.executable, "-m", "ramseykit.cli", *args],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=600,
    )
    return proc


def test_enumerate_small_table(capsys):
    assert main(["enumerate", "--t1", "K3", "--t2", "J7", "--max-n", "5", "--jobs", "1"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "n\tcount\tedges"
    assert "5\t14\t0-6" in out


def test_enumerate_is_byte_identical(capsys):
    argv = ["enumerate", "--t1", "K3", "--t2", "J7", "--max-n", "6", "--jobs", "1"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_enumerate_limit_exit_code(capsys):
    rc = main(
        ["enumerate", "--t1", "K3", "--t2", "J7", "--max-n", "6", "--limit", "5", "--jobs", "1"]
    )
    assert rc == 3


def test_verify_exit_codes():
    assert main(["verify", "figure3"]) == 0
    assert main(["verify", "figure4"]) == 0


def test_usage_error_exit_code():
    proc = run_cli(["enumerate", "--t1", "K3"])
    assert proc.returncode == 2
    proc = run_cli(["arrow", "--graph", "-", "--targets", "Q9"], stdin="D~{\n")
    assert proc.returncode == 2


def test_split_stream_verdicts():
    stdin = emit_graph6(Graph.complete(5)) + "\n" + emit_graph6(Graph.complete(6)) + "\n"
    proc = run_cli(["split", "--targets", "K3,K3", "--jobs", "1"], stdin=stdin)
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].endswith(" SPLITTABLE")
    assert lines[1].endswith(" UNSPLITTABLE")
    key1 = lines[0].split()[0]
    assert bytes.fromhex(key1)[0] == 5


def test_arrow_command(tmp_path):
    path = tmp_path / "j7.g6"
    from ramseykit.targets import clique_minus_edge

    path.write_text(emit_graph6(clique_minus_edge(7).pattern()) + "\n")
    proc = run_cli(["arrow", "--graph", str(path), "--targets", "K3e,J4"])
    assert proc.returncode == 0
    assert proc.stdout.strip() == "ARROWS"
    proc = run_cli(["arrow", "--graph", str(path), "--targets", "J4,J4"])
    assert proc.stdout.strip() == "SPLITTABLE"


def test_cnf_output(tmp_path):
    gpath = tmp_path / "k4.g6"
    gpath.write_text(emit_graph6(Graph.complete(4)) + "\n")
    out = tmp_path / "out.cnf"
    proc = run_cli(
        ["cnf", "--graph", str(gpath), "--t1", "K3", "--t2", "J4", "-o", str(out)]
    )
    assert proc.returncode == 0
    text = out.read_text()
    assert "p cnf 6 10" in text
    assert text.count(" 0\n") == 10


def test_named_graph6_roundtrip(tmp_path):
    out = tmp_path / "s.g6"
    proc = run_cli(["named", "--id", "SCHLAFLI", "-o", str(out)])
    assert proc.returncode == 0
    from ramseykit.graph6 import parse_graph6

    g = parse_graph6(out.read_text().strip())
    assert g.n == 27 and all(g.degree(v) == 10 for v in range(27))


def test_anneal_cli_deterministic():
    argv = ["anneal", "--n", "5", "--targets", "K3,K3", "--seed", "7"]
    a = run_cli(argv)
    b = run_cli(argv)
    assert a.returncode == 0 and a.stdout == b.stdout
    assert "seed=7" in a.stdout
    matrix = "\n".join(a.stdout.splitlines()[2:]) + "\n"
    c = parse_coloring_matrix(matrix)
    assert c.n == 5


def test_anneal_cli_reports_none():
    proc = run_cli(["anneal", "--n", "6", "--targets", "K3,K3"])
    assert proc.returncode == 0
    assert "NONE best-energy=" in proc.stdout


def test_clone_cli(tmp_path):
    src = tmp_path / "kite.coloring"
    # vertices 0 and 1 agree at vertex 2; link color 2 (file numbering)
    src.write_text("0 2 1\n2 0 1\n1 1 0\n")
    proc = run_cli(
        ["clone", "--coloring", str(src), "--x", "0", "--y", "1", "--link-color", "2"]
    )
    assert proc.returncode == 0
    grown = parse_coloring_matrix(proc.stdout)
    assert grown.n == 4
    assert grown.color_of(0, 3) == 1 and grown.color_of(1, 3) == 1
    assert grown.color_of(2, 3) == 0


def test_clone_cli_rejects_disagreeing_pair(tmp_path):
    src = tmp_path / "bad.coloring"
    src.write_text("0 1 1\n1 0 2\n1 2 0\n")
    proc = run_cli(
        ["clone", "--coloring", str(src), "--x", "0", "--y", "1", "--link-color", "1"]
    )
    assert proc.returncode == 2
    assert "disagree" in proc.stderr


def test_arrow_witness_out(tmp_path):
    gpath = tmp_path / "k5.g6"
    gpath.write_text(emit_graph6(Graph.complete(5)) + "\n")
    wpath = tmp_path / "witness.txt"
    proc = run_cli(
        [
            "arrow",
            "--graph",
            str(gpath),
            "--targets",
            "K3,K3",
            "--witness-out",
            str(wpath),
        ]
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "SPLITTABLE"
    c = parse_coloring_matrix(wpath.read_text())
    assert c.n == 5 and c.m == 2


def test_extend_c50_cli(tmp_path):
    from ramseykit.coloring import EdgeColoring, emit_coloring_matrix

    def fn(u, v):
        if (u, v) == (0, 1):
            return 3
        if u in (0, 1):
            return v % 3
        return (u + v) % 3

    src = tmp_path / "twin.coloring"
    src.write_text(emit_coloring_matrix(EdgeColoring.from_function(6, 4, fn)))
    out = tmp_path / "grown.coloring"
    proc = run_cli(["extend-c50", "--c50", str(src), "-o", str(out)])
    assert proc.returncode == 0
    assert "verdict: VALID" in proc.stdout
    assert "isolated" in proc.stdout
    grown = parse_coloring_matrix(out.read_text())
    assert grown.n == 7


def test_verify_split_pipeline_cli(tmp_path):
    proc = run_cli(
        [
            "enumerate",
            "--t1",
            "K3",
            "--t2",
            "J7",
            "--max-n",
            "5",
            "--emit-graphs",
            str(tmp_path),
            "--jobs",
            "1",
        ]
    )
    assert proc.returncode == 0
    proc = run_cli(
        ["verify", "split-pipeline", "--level", "5", "--archive", str(tmp_path)]
    )
    assert proc.returncode == 0
    assert "result: PASS" in proc.stdout
