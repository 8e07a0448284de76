import json
import subprocess
import sys

import jsonschema
import pytest

from arrholonomy import corpus
from arrholonomy.cli import main
from arrholonomy.schemas import SIDECAR, schema_for


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, A in [("braid3", corpus.braid(3)), ("braid4", corpus.braid(4)),
                    ("generic4", corpus.generic4()), ("nh", corpus.non_hypersolvable6()),
                    ("single", corpus.boolean(1))]:
        p = tmp_path / f"{name}.arr"
        p.write_text(A.to_text())
        out[name] = str(p)
    bad = tmp_path / "bad.arr"
    bad.write_text("dim 3\n1 0 0\n0 1 x\n")
    out["bad"] = str(bad)
    return out


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    rep = json.loads(capsys.readouterr().out)
    jsonschema.validate(rep, schema_for(argv[0]))
    return code, rep


def test_lattice(files, capsys):
    code, rep = run_json(capsys, "lattice", files["braid3"])
    assert code == 0 and rep["rank"] == 2 and len(rep["flats"]) == 5
    assert rep["exponents"] == [1, 2]
    code, rep = run_json(capsys, "lattice", files["single"])
    assert rep["rank"] == 1 and len(rep["flats"]) == 2
    code, rep = run_json(capsys, "lattice", files["braid4"])
    sizes = [sum(f["rank"] == r for f in rep["flats"]) for r in range(4)]
    assert sizes == [1, 6, 7, 1]


def test_supersolvable(files, capsys):
    code, rep = run_json(capsys, "supersolvable", files["generic4"])
    assert code == 0 and rep["supersolvable"] is False and rep["modular_chain"] is None


def test_hypersolvable(files, capsys):
    code, rep = run_json(capsys, "hypersolvable", files["generic4"])
    assert code == 0 and rep["ell"] == 4 and rep["s"] == 1
    code, rep = run_json(capsys, "hypersolvable", files["nh"])
    assert code == 0 and rep["hypersolvable"] is False


def test_holonomy(files, capsys):
    code, rep = run_json(capsys, "holonomy", files["braid3"])
    assert code == 0 and rep["phi"] == [3, 1, 2, 3, 6]
    assert rep["lcs_check"]["pass"] and rep["decomposition_check"]["pass"]
    assert rep["kernel_report"]["pass"]
    code, rep = run_json(capsys, "holonomy", files["nh"], "-N", "3")
    assert rep["decomposition_check"] is None and rep["lcs_check"]["rhs"] is None


def test_verify(files, capsys):
    code, rep = run_json(capsys, "verify", files["braid3"])
    assert code == 0 and rep["status"] == "PASS" and rep["phi"] == [3, 1, 2, 3, 6]
    code, rep = run_json(capsys, "verify", files["generic4"], "--max-degree", "4")
    assert code == 0 and rep["exponent_source"] == "hypersolvable"
    assert rep["lcs_check"]["rhs"] == [1, -4, 6, -4, 1]
    code, rep = run_json(capsys, "verify", files["nh"], "-N", "3")
    assert code == 2 and rep["status"] == "NOT_APPLICABLE" and rep["phi"] == [6, 3, 6]


def test_text_output(files, capsys):
    assert main(["verify", files["braid3"]]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "1 - 3t + 2t^2" in out
    assert main(["verify", files["nh"], "-N", "3"]) == 2
    out = capsys.readouterr().out
    assert "NOT_APPLICABLE" in out and "6, 3, 6" in out
    for cmd in ("lattice", "supersolvable", "hypersolvable", "holonomy", "deform"):
        assert main([cmd, files["generic4"], "-N", "3"]) == 0
        assert capsys.readouterr().out.strip()


def test_deform(files, tmp_path, capsys):
    code, rep = run_json(capsys, "deform", files["generic4"], "--seed", "7")
    assert code == 0 and rep["dim"] == 4 and rep["supersolvable"] and rep["rank2_preserved"]
    assert rep["exponents"] == [1, 1, 1, 1]
    target = tmp_path / "out.arr"
    assert main(["deform", files["generic4"], "--seed", "7", "-o", str(target)]) == 0
    capsys.readouterr()
    assert target.read_text() == rep["arrangement"]
    side = json.loads((tmp_path / "out.arr.json").read_text())
    jsonschema.validate(side, SIDECAR)
    assert side["seed"] == 7
    code, rep = run_json(capsys, "deform", files["braid3"])
    assert rep["s"] == 0 and rep["arrangement"] == open(files["braid3"]).read()
    code, rep = run_json(capsys, "deform", files["nh"])
    assert code == 2 and rep["status"] == "NOT_HYPERSOLVABLE"


def test_output_file(files, tmp_path, capsys):
    target = tmp_path / "rep.json"
    assert main(["lattice", files["braid3"], "--json", "-o", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["rank"] == 2


def test_errors(files, tmp_path, capsys):
    assert main(["lattice", files["bad"]]) == 1
    assert "error" in capsys.readouterr().err
    assert main(["deform", files["bad"]]) == 1
    assert main(["lattice", str(tmp_path / "missing.arr")]) == 1
    assert main(["holonomy", files["braid3"], "-N", "0"]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", files["braid3"]])
    assert exc.value.code == 1
    capsys.readouterr()


def test_flat_cap(files, monkeypatch, capsys):
    monkeypatch.setenv("ARR_MAX_FLATS", "5")
    assert main(["lattice", files["braid4"]]) == 1
    assert "error" in capsys.readouterr().err


def test_threads_accepted(files, capsys):
    assert main(["lattice", files["braid3"], "--threads", "4"]) == 0


def test_deterministic_bytes(files):
    cmd = [sys.executable, "-m", "arrholonomy", "deform", files["generic4"], "--seed", "3", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
    cmd = [sys.executable, "-m", "arrholonomy", "verify", files["braid4"], "-N", "3", "--json"]
    assert subprocess.run(cmd, capture_output=True).stdout == subprocess.run(cmd, capture_output=True).stdout
