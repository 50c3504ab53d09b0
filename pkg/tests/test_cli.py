import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from conftest import hopf
from hopfdual.algfile import dump
from hopfdual.cli import ElementParseError, main, parse_element


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def h4_file(tmp_path):
    p = tmp_path / "h4.json"
    p.write_text(json.dumps(dump(hopf("h4"))))
    return p


@pytest.fixture
def broken_file(tmp_path):
    doc = dump(hopf("h4"))
    # g·g = g instead of 1: then (g·g)·x = gx but g·(g·x) = x
    doc["product"] = [r for r in doc["product"] if r[:2] != [1, 1]] + [[1, 1, [[1, "1"]]]]
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(doc))
    return p


def test_check_h4_all():
    code, out = run("check", "--builtin", "h4", "--suite", "all")
    assert code == 0
    assert out.startswith("== all :: h4 :: PASS")


def test_check_s3_pentagon():
    assert run("check", "--builtin", "group:s3", "--suite", "pentagon")[0] == 0


def test_report_is_deterministic(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert run("check", "--builtin", "h4", "--suite", "all", "--report", str(p))[0] == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    rep = json.loads(paths[0].read_text())
    assert rep["status"] == "pass" and "timings" not in rep


def test_timings_are_opt_in(tmp_path):
    p = tmp_path / "t.json"
    run("check", "--builtin", "group:z2", "--suite", "axioms", "--report", str(p), "--timings")
    assert "timings" in json.loads(p.read_text())


def test_file_input(h4_file):
    assert run("check", "--file", str(h4_file), "--suite", "identities1")[0] == 0


def test_broken_associativity_exits_1_with_witness(broken_file, tmp_path):
    rep_path = tmp_path / "r.json"
    code, out = run("check", "--file", str(broken_file), "--suite", "axioms", "--report", str(rep_path))
    assert code == 1
    rep = json.loads(rep_path.read_text())
    assoc = next(c for c in rep["checks"] if c["name"] == "algebra.associativity")
    assert assoc["status"] == "fail"
    assert assoc["witness"].count(",") >= 2


def test_malformed_file_exits_2(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"version": "v1", "basis": []}')
    assert run("check", "--file", str(p))[0] == 2
    assert run("check", "--file", str(tmp_path / "missing.json"))[0] == 2


def test_unknown_builtin_and_bad_flags_exit_2():
    assert run("check", "--builtin", "group:q8")[0] == 2
    assert run("check", "--builtin", "h4", "--suite", "nonsense")[0] == 2
    assert run("derive")[0] == 2


def test_derive_z2():
    code, out = run("derive", "--builtin", "group:z2")
    assert code == 0
    assert "phi    = ['1', '0']" in out
    assert "delta  = e" in out
    assert "tau    = 1" in out


def test_derive_h4(tmp_path):
    p = tmp_path / "d.json"
    code, out = run("derive", "--builtin", "h4", "--report", str(p))
    assert code == 0
    d = json.loads(p.read_text())["derived"]
    assert d["delta"] == "g"
    assert d["tau"] == "-1"
    assert d["dual"]["phi_hat_of_unit"] is not None


def test_derive_rejects_non_hopf_input(broken_file):
    assert run("derive", "--file", str(broken_file))[0] == 3


def test_infinite_example_preconditions():
    assert run("check", "--builtin", "kz", "--suite", "dual")[0] == 3
    assert run("derive", "--builtin", "kz")[0] == 3
    assert run("check", "--builtin", "kz", "--suite", "all", "--window", "3")[0] == 0


def test_fourier_command():
    code, out = run("fourier", "--builtin", "group:z2", "--element", "g")
    assert code == 0
    assert "F(g) = ê_g" in out
    assert "F^-1(F(g)) = g" in out
    code, out = run("fourier", "--builtin", "group:z2", "--element", "e")
    assert code == 0 and "F^-1(F(e)) = e" in out


@pytest.mark.parametrize("bad", ["g +", "", "q", "2**g", "1/0*g", "[[\"g\"]]"])
def test_malformed_element_exits_2(bad):
    assert run("fourier", "--builtin", "h4", "--element", bad)[0] == 2


def test_parse_element_forms():
    A = hopf("h4").alg
    x = parse_element(A, "2*g - 1/2*x")
    assert x.vector() == [0, 2, Fraction(-1, 2), 0]
    assert parse_element(A, '[["g", "2"], [2, "-1/2"]]') == x
    assert parse_element(A, "-gx") == A.basis_element(3).scale(-1)
    assert parse_element(A, "1") == A.one()
    with pytest.raises(ElementParseError):
        parse_element(A, "3*y")


def test_float_backend():
    assert run("check", "--builtin", "taft:3", "--suite", "fourier", "--float")[0] == 0
    code, out = run("derive", "--builtin", "h4", "--float", "--eps", "1e-8")
    assert code == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hopfdual", "derive", "--builtin", "group:z2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "tau" in proc.stdout
