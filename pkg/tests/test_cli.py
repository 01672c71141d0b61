import io
import json
import subprocess
import sys

import pytest

from tw2mcb.cli import main
from tw2mcb.graph import load_graph

TRIANGLE = "p 3 3\ne 0 1 1\ne 1 2 1\ne 0 2 1\n"
K4 = "p 4 6\ne 0 1 1\ne 0 2 1\ne 0 3 1\ne 1 2 1\ne 1 3 1\ne 2 3 1\n"
K23 = "p 5 6\ne 0 2 1\ne 2 1 1\ne 0 3 1\ne 3 1 1\ne 0 4 1\ne 4 1 1\n"
LONG_TRIANGLE = "p 3 3\ne 0 1 1\ne 1 2 1\ne 0 2 3\n"
DIAMOND = "p 4 5\ne 0 1 1\ne 1 2 1\ne 2 3 1\ne 0 3 1\ne 0 2 1\n"


def run(argv, tmp_path=None, text=None):
    if text is not None:
        path = tmp_path / "g.txt"
        path.write_text(text)
        argv = [a if a != "@" else str(path) for a in argv]
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_mcb_explicit(tmp_path):
    assert run(["mcb", "@", "--explicit"], tmp_path, TRIANGLE) == (0, "c 3 0 1 2 w=3\n")


def test_mcb_k4_exit_2(tmp_path):
    assert run(["mcb", "@"], tmp_path, K4)[0] == 2


def test_mcb_stats(tmp_path):
    code, out = run(["mcb", "@", "--stats"], tmp_path, K23)
    assert code == 0
    stats = dict(line.split("=") for line in out.splitlines())
    assert stats["cycles"] == "2" and stats["total_weight"] == "8"
    assert list(stats) == ["n", "m", "long", "parts", "cycles", "total_weight", "implicit_size", "explicit_size"]


def test_mcb_implicit_grammar(tmp_path):
    code, out = run(["mcb", "@"], tmp_path, K23)
    lines = out.splitlines()
    assert lines[0] == "PART 0" and "TRACE" in lines and lines[-1] == "LONG"
    assert sum(line.startswith("G 0 1 2") for line in lines) == 2
    assert sum(line.startswith("f 3 ") for line in lines) == 2
    assert any(line.startswith("s u=0 v=1 k=3 edge=0 w=2 j=") for line in lines)


def test_mcb_json_mirrors_text(tmp_path):
    code, out = run(["mcb", "@", "--format", "json"], tmp_path, LONG_TRIANGLE)
    doc = json.loads(out)
    assert doc == {"parts": [], "trace": [], "long": [{"u": 0, "v": 2, "w": 3}]}
    code, out = run(["mcb", "@", "--stats", "--format", "json"], tmp_path, K23)
    assert json.loads(out)["total_weight"] == 8


@pytest.mark.parametrize("text", ["p 3 2\ne 0 1 1\ne 0 1 2\n", "garbage\n", "p 2 1\ne 0 1 x\n"])
def test_mcb_bad_input_exit_1(tmp_path, text):
    assert run(["mcb", "@"], tmp_path, text)[0] == 1


def test_missing_file_exit_1(tmp_path):
    assert run(["mcb", str(tmp_path / "nope.txt")])[0] == 1


def test_gen_triangle_and_determinism():
    code, out = run(["gen", "--n", "3", "--seed", "1"])
    g = load_graph(out)
    assert code == 0 and (g.n, g.m) == (3, 3)
    assert run(["gen", "--n", "300", "--delete-prob", "0.2", "--seed", "5"]) == run(
        ["gen", "--n", "300", "--delete-prob", "0.2", "--seed", "5"]
    )


def test_gen_bad_params():
    assert run(["gen", "--n", "2"])[0] == 1
    assert run(["gen", "--n", "5", "--wmin", "9", "--wmax", "1"])[0] == 1


def test_gen_round_trip_1000_seeds(tmp_path):
    for seed in range(1000):
        code, text = run(["gen", "--n", "30", "--delete-prob", "0.2", "--seed", str(seed)])
        assert code == 0
        assert run(["mcb", "@", "--stats"], tmp_path, text)[0] == 0


def test_verify(tmp_path):
    assert run(["verify", "@"], tmp_path, K23)[0] == 0
    assert run(["verify", "@"], tmp_path, LONG_TRIANGLE)[0] == 0
    code, out = run(["verify", "@", "--inject", "duplicate"], tmp_path, K23)
    assert code != 0 and "rank FAIL" in out
    code, out = run(["verify", "@", "--inject", "drop"], tmp_path, K23)
    assert code != 0 and "count FAIL" in out
    code, out = run(["verify", "@", "--inject", "heavier"], tmp_path, DIAMOND)
    assert code != 0 and "weight FAIL" in out


def test_verify_skips_weight_above_max_n(tmp_path):
    code, text = run(["gen", "--n", "40", "--seed", "2"])
    code, out = run(["verify", "@", "--max-n", "10"], tmp_path, text)
    assert code == 0 and "weight skip" in out


def test_bench_small_table():
    code, out = run(["bench", "--sizes", "300,3000", "--repeats", "1"])
    lines = out.splitlines()
    assert code == 0 and lines[0].split()[0] == "n"
    ns = [int(line.split()[0]) for line in lines[1:3]]
    assert ns == sorted(ns)
    assert lines[-1].startswith("ratios ")


def test_stdin_and_console_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "tw2mcb", "mcb", "-", "--explicit"],
        input=TRIANGLE.encode(),
        capture_output=True,
    )
    assert proc.returncode == 0 and proc.stdout == b"c 3 0 1 2 w=3\n"
