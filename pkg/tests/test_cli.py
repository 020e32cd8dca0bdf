import io
import json
import subprocess
import sys

import pytest

from fideal import fixture_path
from fideal.cli import main


def run(argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_gen_pipe_verify(monkeypatch):
    code, text = run(["gen", "--alg", "4.8", "--k", "3", "--l", "1", "--m", "2", "--policy", "lex"])
    assert code == 0 and text.endswith("\n")
    code, rep = run(["verify"], stdin=text, monkeypatch=monkeypatch)
    rep = json.loads(rep)
    assert rep["f_ideal"] is True
    assert rep["facet_tail"] == rep["sr_tail"] == [7, 13, 2]


def test_verify_van_tuyl():
    code, text = run(["verify", str(fixture_path("van_tuyl_printed"))])
    rep = json.loads(text)
    assert code == 0 and rep["f_ideal"] is True
    assert rep["generators"] == 29 and rep["minimal"] is False


def test_exit_codes(capsys):
    assert run(["density", "exact", "--n", "6", "--d", "2"])[0] == 3
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "structurally-impossible"
    assert run(["gen", "--alg", "4.1", "--k", "5"])[0] == 2
    assert run(["gen", "--alg", "4.1"])[0] == 2
    assert run(["enumerate", "--n", "3", "--d", "5"])[0] == 2
    assert run(["verify", "/nonexistent.json"])[0] == 2
    assert run(["bogus"])[0] == 2
    assert run(["gen", "--alg", "4.8", "--k", "3", "--l", "1", "--m", "2", "--choice", "[[1,2,3]]"])[0] == 2


def test_construction_failed_exit_code(monkeypatch):
    import fideal.constructors as C
    from fideal import ConstructionFailed

    def boom(*a, **k):
        raise ConstructionFailed("forced")
    monkeypatch.setattr(C, "construct_mixed_even", boom)
    assert run(["gen", "--alg", "4.6", "--k", "4"])[0] == 4


def test_seeded_gen_is_deterministic():
    argv = ["gen", "--alg", "pure3", "--n", "10", "--policy", "rand", "--seed", "4"]
    assert run(argv)[1] == run(argv)[1]
    assert json.loads(run(argv)[1])["trace"]["policy"] == {"mode": "random", "seed": 4}


def test_perfect_and_dual(monkeypatch):
    code, text = run(["perfect"], stdin='{"n": 4, "d": 2, "monomials": [[1,2],[3,4],[1,3]]}', monkeypatch=monkeypatch)
    assert json.loads(text) == {"lower": True, "upper": True, "perfect": True, "pure_f_ideal": "yes"}
    code, text = run(["perfect"], stdin='{"n": 6, "monomials": [[1,2]]}', monkeypatch=monkeypatch)
    assert json.loads(text)["pure_f_ideal"] == "impossible"
    code, text = run(["dual", str(fixture_path("block_odd_k3"))])
    assert code == 0 and all(len(g) >= 4 for g in json.loads(text)["generators"])


def test_human_format():
    code, text = run(["fvector", "--format", "human", str(fixture_path("mixed_odd_n7_printed"))])
    assert "[1, 7, 18, 12]" in text and "without f_-1: [7, 18, 12]" in text
    assert text.rstrip().endswith("f-ideal: no")


def test_density_commands(tmp_path):
    code, text = run(["density", "exact", "--n", "4", "--d", "2"])
    assert json.loads(text) == {"n": 4, "d": 2, "total": 20, "lp": 16, "up": 16, "perfect": 12, "fideal": 12}
    code, text = run(["density", "sample", "--n", "8", "--d", "2", "--trials", "500", "--seed", "2"])
    assert [e["kind"] for e in json.loads(text)["estimates"]] == ["lp", "up", "perfect", "fideal"]
    out = tmp_path / "t.csv"
    code, _ = run(["density", "trend", "--d", "2", "--ns", "8,9", "--trials", "300", "--seed", "1", "--out", str(out)])
    assert code == 0 and len(out.read_text().splitlines()) == 3
    assert run(["density", "trend", "--d", "2", "--ns", "8,x", "--trials", "3", "--seed", "1"])[0] == 2


def test_console_script_subprocess():
    gen = subprocess.run([sys.executable, "-m", "fideal", "gen", "--alg", "4.9", "--k", "4", "--l", "1", "--m", "2"],
                         capture_output=True, text=True, check=True)
    ver = subprocess.run([sys.executable, "-m", "fideal", "verify"], input=gen.stdout,
                         capture_output=True, text=True, check=True)
    assert json.loads(ver.stdout)["sr_tail"] == [10, 25, 2]
