import io
import json
import subprocess
import sys

import pytest

from branecalc import __version__
from branecalc.cli import main

from models import SOURCES


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in SOURCES.items():
        p = tmp_path / f"{name}.model"
        p.write_text(text)
        paths[name] = str(p)
    bad = tmp_path / "bad.model"
    bad.write_text("generator x 2\ngenerator y 3\ngenerator z 4\nd y = x^2\nd z = x*y\n")
    paths["bad"] = str(bad)
    return paths


def run(argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_check(files):
    code, out, _ = run(["check", files["S4"]])
    assert code == 0
    assert "pure: yes" in out and "d^2 = 0: yes" in out


def test_cohomology_tables(files):
    code, out, _ = run(["cohomology", files["Lx4"], "--max-degree", "8", "--format", "json"])
    assert code == 0
    assert json.loads(out)["result"]["dimensions"] == [1, 0, 0, 0, 1, 0, 0, 0, 1]
    code, out, _ = run(["cohomology", files["S4"], "--max-degree", "8", "--format", "json"])
    assert json.loads(out)["result"]["dimensions"] == [1, 0, 0, 0, 1, 0, 0, 0, 0]
    code, out, _ = run(["cohomology", files["S4"], "--max-degree", "0", "--format", "json"])
    assert json.loads(out)["result"]["dimensions"] == [1]


def test_stdin_input(monkeypatch):
    code, out, _ = run(["cohomology", "-", "--max-degree", "4", "--format", "json"],
                       stdin="generator x 4\n", monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["result"]["dimensions"] == [1, 0, 0, 0, 1]


def test_env_default_max_degree(files, monkeypatch):
    monkeypatch.setenv("BRANECALC_MAX_DEGREE", "5")
    code, out, _ = run(["cohomology", files["Lx4"], "--format", "json"])
    doc = json.loads(out)
    assert doc["truncation"] == 5 and len(doc["result"]["dimensions"]) == 6
    monkeypatch.setenv("BRANECALC_MAX_DEGREE", "lots")
    code, _, err = run(["cohomology", files["Lx4"]])
    assert code == 2 and "BRANECALC_MAX_DEGREE" in err


def test_default_max_degree(files, monkeypatch):
    monkeypatch.delenv("BRANECALC_MAX_DEGREE", raising=False)
    code, out, _ = run(["cohomology", files["S4"], "--format", "json"])
    assert json.loads(out)["truncation"] == 18


def test_brane_composite_witness(files):
    code, out, _ = run(["brane", files["Lx4"], "--k", "2", "--op", "composite", "--max-degree", "8"])
    assert code == 0
    assert "verdict: NONTRIVIAL" in out
    assert "witness: 1 sx^1 ↦ -1 s1x^1" in out


def test_brane_coproduct_trivial_for_s4(files):
    code, out, _ = run(["brane", files["S4"], "--k", "2", "--op", "coproduct", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["verdict"] == "TRIVIAL"
    assert all(not s["images"] for s in doc["result"]["slices"])
    assert doc["result"]["degree_shift"] == -2


def test_brane_json_is_byte_stable(files):
    argv = ["brane", files["L46"], "--k", "2", "--op", "composite", "--max-degree", "12", "--format", "json"]
    first = run(argv)[1]
    second = run(argv)[1]
    assert first == second
    doc = json.loads(first)
    assert doc["engine"] == {"name": "branecalc", "version": __version__}
    assert doc["result"]["verdict"] == "NONTRIVIAL"


def test_brane_product_solver_section(files):
    code, out, _ = run(["brane", files["Lx4"], "--k", "2", "--op", "product", "--max-degree", "6",
                        "--section", "solver", "--format", "json"])
    images = {s["degree"]: s["images"] for s in json.loads(out)["result"]["slices"]}
    assert ["1 sx^1", {"text": "-1", "terms": [["-1", ""]]}] in images[3]


def test_odd_k_is_out_of_scope(files):
    code, _, err = run(["brane", files["Lx4"], "--k", "3", "--op", "composite"])
    assert code == 2
    assert "out of scope" in err and "even k" in err


def test_verify_passes(files):
    for name in ("Lx4", "S4"):
        code, out, _ = run(["verify", files[name], "--k", "2"])
        assert code == 0, out
        assert "all invariants hold" in out


def test_verify_json(files):
    code, out, _ = run(["verify", files["S4"], "--k", "2", "--format", "json"])
    doc = json.loads(out)
    assert doc["result"]["passed"] and doc["result"]["first_failure"] is None


def test_input_errors_exit_two(files, tmp_path):
    assert run(["verify", files["bad"], "--k", "2"])[0] == 2
    assert run(["check", str(tmp_path / "missing.model")])[0] == 2
    syntax = tmp_path / "syntax.model"
    syntax.write_text("generator x 4\nd x = (x\n")
    code, _, err = run(["check", str(syntax)])
    assert code == 2 and "line 2" in err
    assert run(["brane", files["Lx4"], "--k", "2"])[0] == 2
    assert run(["cohomology", files["Lx4"], "--max-degree", "-1"])[0] == 2


def test_connectivity_failure_is_input_error(files):
    code, _, err = run(["brane", files["Lx4"], "--k", "4", "--op", "product"])
    assert code == 2 and "connected" in err


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "branecalc", "cohomology", files["Lx4"], "--max-degree", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith(f"branecalc {__version__}")


def test_verification_failure_exits_one(files, monkeypatch):
    import branecalc.cli as cli

    def failing(m, k, n_max):
        return [("d^2=0 on base", True, ""), ("D(gamma)=0", False, "nonzero"), ("later", False, "x")]

    monkeypatch.setattr(cli, "verify_invariants", failing)
    code, out, _ = run(["verify", files["S4"], "--k", "2"])
    assert code == 1
    assert "first failing invariant: D(gamma)=0" in out
