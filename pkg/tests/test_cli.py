import json
import subprocess
import sys
from importlib import resources

import jsonschema

from spin7 import cli
from spin7.cli import dispatch
from spin7.classify import admissible_pairs
from spin7.verification import SuiteReport


def _env(result):
    env = json.loads(result.payload)
    schema = json.loads(
        (resources.files("spin7") / "schema.json").read_text())
    jsonschema.validate(env, schema)
    return env


def test_ricci_family_command_matches_the_solver():
    r = dispatch(["ricci", "--family", "5.1", "--set", "a1=1,b1=0,b2=0",
                  "--hol", "R+su2c"])
    assert r.exit_code == 0
    payload = _env(r)["payload"]
    assert payload["holonomy"] == "r+su2c"
    assert payload["solver"] == ["12"] * 7 + ["0"]
    assert payload["closed_form"] == payload["solver"]
    assert payload["matches"] and payload["consistent"]


def test_ricci_command_reports_inconsistency():
    r = dispatch(["ricci", "--family", "5.1", "--set", "a1=1,b1=0,b2=0",
                  "--hol", "su3"])
    assert r.exit_code == 1
    env = _env(r)
    assert env["ok"] is False
    assert env["payload"]["solver"] is None
    assert env["diff"][0]["actual"] == "inconsistent"
    assert "failed" in r.diagnostics


def test_admissibility_table_rendering_is_stable():
    first = dispatch(["table", "admissibility"])
    second = dispatch(["--format", "json", "table", "admissibility"])
    assert first.exit_code == 0
    assert first.payload == second.payload
    rows = _env(first)["payload"]["rows"]
    grouped = admissible_pairs()
    assert len(rows) == len(grouped)
    for row in rows:
        assert row["k_nonzero"] == grouped[row["isotropy"]]["k_nonzero"]

    md = dispatch(["table", "admissibility", "--format", "markdown"])
    lines = md.payload.splitlines()
    assert lines[0].startswith("| isotropy |")
    assert len(lines) == 2 + len(rows)


def test_invariants_command_lists_spinors():
    r = dispatch(["invariants", "--algebra", "SU3", "--space", "spinors"])
    payload = _env(r)["payload"]
    assert payload["dim"] == 4
    assert payload["basis"] == ["psi1", "psi2", "psi9", "psi10"]


def test_invariants_command_handles_slope_labels():
    r = dispatch(["invariants", "--algebra", "t1[1,0]", "--space", "forms3"])
    payload = _env(r)["payload"]
    assert payload["algebra"] == "t1[1,0]"
    assert payload["dim"] == 20


def test_iso_command_identifies_a_stabilizer():
    r = dispatch(["iso", "--form", "e_135 - e_245 - e_146 - e_236"])
    payload = _env(r)["payload"]
    assert payload["algebra"] == "su3"
    assert payload["dim"] == 8
    assert len(payload["basis"]) == 8


def test_curvature_command_runs_all_checks():
    r = dispatch(["curvature", "--case", "5.3.1-I",
                  "--set", "a1=1,a2=1,b1=1"])
    assert r.exit_code == 0
    payload = _env(r)["payload"]
    assert payload["holonomy"] == "t2"
    assert all(payload["checks"].values())


def test_reconstruct_command_prints_structure_constants():
    r = dispatch(["reconstruct", "--example", "1"])
    payload = _env(r)["payload"]
    assert payload["dim"] == 8
    assert payload["jacobi"] is True
    assert payload["killing_nondegenerate"] is False
    assert payload["structure"]["[e5,e6]"] == {"e7": "-7"}


def test_usage_errors_exit_with_2(capsys):
    assert dispatch(["bogus"]).exit_code == 2
    capsys.readouterr()
    assert dispatch(["ricci", "--family", "9.9"]).exit_code == 2
    assert dispatch(["ricci", "--family", "5.1",
                     "--set", "a1"]).exit_code == 2
    bad_form = dispatch(["iso", "--form", "e_1x"])
    assert bad_form.exit_code == 2
    assert "offset" in bad_form.diagnostics
    assert dispatch(["invariants", "--algebra", "nope",
                     "--space", "forms3"]).exit_code == 2


def test_verify_all_envelope_and_exit_code(monkeypatch):
    def fake_run_all(seed):
        good = SuiteReport("01-good")
        good.add("works", True)
        bad = SuiteReport("02-bad")
        bad.add("breaks", False, "expected 1, got 2")
        bad.note("a note")
        return [good, bad]

    monkeypatch.setattr(cli, "run_all", fake_run_all)
    r = dispatch(["verify-all", "--seed", "5"])
    assert r.exit_code == 1
    env = _env(r)
    assert env["seed"] == 5
    assert env["ok"] is False
    assert env["diff"] == [{"where": "02-bad: breaks", "expected": "pass",
                            "actual": "expected 1, got 2"}]

    md = dispatch(["verify-all", "--seed", "5", "--format", "markdown"])
    assert "PASS 01-good (1 check)" in md.payload
    assert "FAIL 02-bad (1 check)" in md.payload
    assert "failed: breaks [expected 1, got 2]" in md.payload
    assert "note: a note" in md.payload


def test_regen_golden_reproduces_packaged_data(tmp_path):
    r = dispatch(["regen-golden", "--out", str(tmp_path)])
    assert r.exit_code == 0
    src = resources.files("spin7") / "golden"
    names = ["families.json", "curvature_cases.json",
             "admissibility_table.json"]
    for name in names:
        assert (tmp_path / name).read_bytes() == \
            (src / name).read_bytes()


def test_module_entry_point_usage_error():
    proc = subprocess.run([sys.executable, "-m", "spin7.cli", "nope"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "usage" in proc.stderr.lower()
