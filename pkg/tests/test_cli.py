"""End-to-end CLI tests: exit codes, report text, JSON payloads, file flow.

Everything runs in-process through main(argv); exit status semantics are
0 = all verdicts true, 1 = some verdict false, 2 = bad input.
"""
import io
import json

import pytest

from ybforge import registry
from ybforge.cli import main
from ybforge.structures import structure_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------- algebra-check ----------

def test_check_dual2(capsys):
    code, out, _ = run(capsys, "algebra-check", "dual2")
    assert code == 0
    assert "[PASS] jordan-w[pattern3]" in out
    assert "commutative=true" in out
    assert "jordan=true" in out


def test_check_noncommutative_skips_w_relation(capsys):
    code, out, _ = run(capsys, "algebra-check", "mat2")
    assert code == 0
    assert "jordan-w skipped" in out
    assert "jordan=false" in out


def test_check_expect_failure_flips_exit(capsys):
    code, out, _ = run(capsys, "algebra-check", "mat2", "--expect", "jordan")
    assert code == 1
    assert "[FAIL] expect:jordan" in out
    code, out, _ = run(capsys, "algebra-check", "mat2",
                       "--expect", "associative,unital")
    assert code == 0


def test_check_expect_unknown_property(capsys):
    code, _, err = run(capsys, "algebra-check", "dual2", "--expect", "flat")
    assert code == 2
    assert "error:" in err


def test_check_unknown_source(capsys):
    code, _, err = run(capsys, "algebra-check", "octonions")
    assert code == 2
    assert "neither a registry name" in err


def test_check_coalgebra_modes(capsys):
    code, out, _ = run(capsys, "algebra-check", "theorem22(-1)",
                       "--jordan-mode", "full")
    assert code == 0
    assert "[PASS] jordan-co[full]" in out
    assert "cocommutative=true" in out
    assert "coassociative=true" in out


def test_check_coalgebra_expect_coassoc_fails_off_minus_one(capsys):
    code, out, _ = run(capsys, "algebra-check", "theorem22(2)",
                       "--expect", "coassociative")
    assert code == 1
    assert "[FAIL] expect:coassociative" in out


@pytest.mark.parametrize("name", ["heis3", "gl11"])
def test_check_superlie(capsys, name):
    code, out, _ = run(capsys, "algebra-check", name)
    assert code == 0
    assert "[PASS] antisymmetric" in out
    assert "[PASS] jacobi" in out


def test_check_structure_file(capsys, tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps(structure_to_json(registry.build("dual2"))))
    code, out, _ = run(capsys, "algebra-check", str(path))
    assert code == 0
    assert "[PASS] jordan-w[pattern3]" in out


def test_check_bad_file(capsys, tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "algebra-check", str(path))
    assert code == 2
    assert "invalid JSON" in err


# ---------- examples ----------

def test_examples_list_is_quiet(capsys):
    code, out, err = run(capsys, "examples", "list")
    assert code == 0
    assert out.splitlines() == registry.names()
    assert err == ""


def test_examples_emit_to_file(capsys, tmp_path):
    path = tmp_path / "t21.json"
    code, _, _ = run(capsys, "examples", "emit", "t21",
                     "--s", "-1", "--t", "-1", "-o", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc == structure_to_json(registry.build("t21", -1, -1))


def test_examples_emit_stdout_keeps_payload_clean(capsys):
    code, out, err = run(capsys, "examples", "emit", "split2", "--m", "1/2")
    assert code == 0
    doc = json.loads(out)          # stdout must be pure JSON
    assert doc["kind"] == "algebra"
    assert doc["table"][1][1] == ["1/2", "0"]
    assert "emit" in err           # the report went to stderr


def test_examples_emit_needs_name(capsys):
    code, _, err = run(capsys, "examples", "emit")
    assert code == 2
    assert "requires a name" in err


# ---------- ybe build / verify ----------

def test_build_verify_loop(capsys, tmp_path):
    path = tmp_path / "op.json"
    code, out, _ = run(capsys, "ybe", "build", "rA", "--algebra", "dual2",
                       "--alpha", "1", "--beta", "2", "--gamma", "1",
                       "-o", str(path))
    assert code == 0
    assert "predicted yang-baxter: true" in out
    code, out, _ = run(capsys, "ybe", "verify", str(path))
    assert code == 0
    assert "[PASS] braid" in out
    assert "[PASS] invertible" in out
    assert "[PASS] braid-qybe-equivalence" in out


def test_build_stdout_payload_pipes_into_verify(capsys, monkeypatch):
    code, out, err = run(capsys, "ybe", "build", "rA", "--algebra", "dual2",
                         "--alpha", "1", "--beta", "2", "--gamma", "1")
    assert code == 0
    json.loads(out)                # payload only
    assert "predicted" in err
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out2, _ = run(capsys, "ybe", "verify", "-")
    assert code == 0
    assert "[PASS] braid" in out2


def test_verify_braid_failure_prints_witness(capsys, tmp_path):
    path = tmp_path / "bad.json"
    run(capsys, "ybe", "build", "rA", "--algebra", "dual2",
        "--alpha", "2", "--beta", "1", "--gamma", "3", "-o", str(path))
    code, out, _ = run(capsys, "ybe", "verify", str(path), "--braid")
    assert code == 1
    assert "[FAIL] braid" in out
    assert "witness: [[0, 0, 1], [0, 0, 1]]" in out


def test_verify_qybe_of_braid_solution_fails(capsys, tmp_path):
    # the braid-true operator does not satisfy the QYBE as given; only its
    # twist composites do (the equivalence check stays green)
    path = tmp_path / "op.json"
    run(capsys, "ybe", "build", "rA", "--algebra", "dual2",
        "--alpha", "1", "--beta", "2", "--gamma", "1", "-o", str(path))
    code, out, _ = run(capsys, "ybe", "verify", str(path),
                       "--qybe", "--equivalence")
    assert code == 1
    assert "[FAIL] qybe" in out
    assert "witness: [[0, 1, 0], [0, 0, 1]]" in out
    assert "[PASS] braid-qybe-equivalence" in out


def test_build_requires_unital_algebra(capsys):
    code, _, err = run(capsys, "ybe", "build", "rA", "--algebra", "t21(-1,-1)",
                       "--alpha", "1", "--beta", "1", "--gamma", "1")
    assert code == 2
    assert "unital" in err


def test_build_rejects_bad_rational(capsys):
    code, _, err = run(capsys, "ybe", "build", "rA", "--algebra", "dual2",
                       "--alpha", "1/0", "--beta", "1", "--gamma", "1")
    assert code == 2
    assert "bad alpha" in err


# ---------- ybe colored / oneparam ----------

def test_colored_certified(capsys):
    code, out, _ = run(capsys, "ybe", "colored", "--algebra", "dual2",
                       "--p", "2", "--q", "3")
    assert code == 0
    assert "[PASS] colored-qybe (certified)" in out
    assert "u: 4 points, degree bound 3" in out


def test_colored_env_grid_too_small(capsys, monkeypatch):
    monkeypatch.setenv("YBFORGE_GRID", "3")
    code, _, err = run(capsys, "ybe", "colored", "--algebra", "dual2",
                       "--p", "2", "--q", "3")
    assert code == 2
    assert "below the certification bound" in err


def test_colored_explicit_grid_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("YBFORGE_GRID", "3")
    code, out, _ = run(capsys, "ybe", "colored", "--algebra", "dual2",
                       "--p", "2", "--q", "3", "--grid", "5")
    assert code == 0
    assert "u: 5 points" in out


def test_oneparam_certified(capsys):
    code, out, _ = run(capsys, "ybe", "oneparam", "--algebra", "dual2",
                       "--q", "2")
    assert code == 0
    assert "[PASS] oneparam-ybe (certified)" in out
    assert "t1: 7 points, degree bound 6" in out


# ---------- ybe wxz38 ----------

def test_wxz38_all_four_conditions(capsys):
    code, out, _ = run(capsys, "ybe", "wxz38", "--algebra", "mat2",
                       "--lambda", "-1", "--mu", "5")
    assert code == 0
    for name in ("[W,W,W]=0", "[Z,Z,Z]=0", "[W,X,X]=0", "[X,X,Z]=0"):
        assert "[PASS] %s" % name in out


# ---------- ybe phi / super-colored ----------

def test_phi_default_central_element(capsys):
    code, out, _ = run(capsys, "ybe", "phi", "--lie", "heis3", "--alpha", "2")
    assert code == 0
    for name in ("braid", "invertible", "yang-baxter", "inverse-formula"):
        assert "[PASS] %s" % name in out


def test_phi_rejects_non_central_z(capsys):
    code, _, err = run(capsys, "ybe", "phi", "--lie", "heis3",
                       "--z", "1,0,0", "--alpha", "1")
    assert code == 2
    assert "central" in err
    code, _, err = run(capsys, "ybe", "phi", "--lie", "gl11",
                       "--z", "0,0,1,0", "--alpha", "1")
    assert code == 2


def test_phi_writes_operator(capsys, tmp_path):
    path = tmp_path / "phi.json"
    code, _, _ = run(capsys, "ybe", "phi", "--lie", "gl11", "--alpha", "1",
                     "-o", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["kind"] == "linop2" and doc["n"] == 4


def test_super_colored_certified(capsys):
    code, out, _ = run(capsys, "ybe", "super-colored", "--lie", "heis3",
                       "--alpha-table", "0=1,1=2,2=3",
                       "--beta-table", "0=1,1=1,2=1")
    assert code == 0
    assert "[PASS] colored-qybe (certified)" in out
    assert "first color only" in out


def test_super_colored_non_proportional_witness(capsys):
    code, out, _ = run(capsys, "ybe", "super-colored", "--lie", "gl11",
                       "--alpha-table", "0=1,1=2,2=3",
                       "--beta-table", "0=1,1=2,2=4")
    assert code == 1
    assert "[FAIL] colored-qybe" in out
    assert "witness" in out


def test_super_colored_table_must_cover_colors(capsys):
    code, _, err = run(capsys, "ybe", "super-colored", "--lie", "heis3",
                       "--alpha-table", "0=1,1=2,2=3",
                       "--beta-table", "0=1,1=1",
                       "--colors", "0,1,2")
    assert code == 2
    assert "total on the color set" in err


# ---------- ybe jordan-restricted / form8 ----------

def test_jordan_restricted_pass_with_full_failure_noted(capsys):
    code, out, _ = run(capsys, "ybe", "jordan-restricted",
                       "--algebra", "sym2jordan",
                       "--alpha", "1", "--beta", "1", "--gamma", "1")
    assert code == 0
    assert "[PASS] restricted-braid" in out
    assert "full braid relation: false" in out


def test_jordan_restricted_failure(capsys):
    code, out, _ = run(capsys, "ybe", "jordan-restricted",
                       "--algebra", "sym2jordan",
                       "--alpha", "1", "--beta", "1", "--gamma", "2")
    assert code == 1
    assert "[FAIL] restricted-braid" in out


def test_jordan_restricted_rejects_non_jordan(capsys):
    code, _, err = run(capsys, "ybe", "jordan-restricted", "--algebra", "mat2",
                       "--alpha", "1", "--beta", "1", "--gamma", "1")
    assert code == 2
    assert "Jordan" in err


def test_form8_match_and_mismatch(capsys):
    code, out, _ = run(capsys, "ybe", "form8", "--algebra", "dual2",
                       "--alpha", "2", "--beta", "1")
    assert code == 0
    assert "q=2 eta=0" in out
    code, out, _ = run(capsys, "ybe", "form8", "--algebra", "split2(1)",
                       "--alpha", "1", "--beta", "1")
    assert code == 1
    assert "'entry': [3, 0]" in out
    code, _, err = run(capsys, "ybe", "form8", "--algebra", "dual2",
                       "--alpha", "0", "--beta", "1")
    assert code == 2


# ---------- dualize ----------

def test_dualize_roundtrip(capsys, tmp_path):
    co = tmp_path / "co.json"
    back = tmp_path / "back.json"
    code, _, _ = run(capsys, "dualize", "sym2jordan", "-o", str(co))
    assert code == 0
    assert json.loads(co.read_text())["kind"] == "coalgebra"
    code, _, _ = run(capsys, "dualize", str(co), "-o", str(back))
    assert code == 0
    doc = json.loads(back.read_text())
    orig = structure_to_json(registry.build("sym2jordan"))
    assert doc["table"] == orig["table"]
    assert doc["basis"] == orig["basis"]


def test_dualize_rejects_graded_structures(capsys):
    code, _, err = run(capsys, "dualize", "heis3")
    assert code == 2
    assert "algebra or coalgebra" in err


# ---------- JSON report mode ----------

def test_json_report_shape(capsys):
    code, out, _ = run(capsys, "algebra-check", "dual2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "algebra-check dual2"
    assert doc["exit"] == 0
    names = [c["name"] for c in doc["checks"]]
    assert "jordan-w[pattern3]" in names
    assert all(c["verdict"] for c in doc["checks"])
    assert any(n.startswith("kind=algebra") for n in doc["notes"])


def test_json_report_failure_carries_witness(capsys, tmp_path):
    path = tmp_path / "bad.json"
    run(capsys, "ybe", "build", "rA", "--algebra", "dual2",
        "--alpha", "2", "--beta", "1", "--gamma", "3", "-o", str(path))
    code, out, _ = run(capsys, "ybe", "verify", str(path), "--braid", "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["exit"] == 1
    braid = [c for c in doc["checks"] if c["name"] == "braid"][0]
    assert braid["verdict"] is False
    assert braid["witness"] == [[0, 0, 1], [0, 0, 1]]
