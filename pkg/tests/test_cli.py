import json
import subprocess
import sys

import pytest

from unimap import census, verify
from unimap.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_analyze_regular(capsys):
    code, env = run_json(capsys, "analyze", "--k", "3", "--y", "(0 3)(1 4)(2 5)")
    assert code == 0 and env["schema_version"] == "1" and env["command"] == "analyze"
    r = env["result"]
    assert (r["profile"]["vertices"], r["profile"]["faces"], r["profile"]["genus"]) == (1, 2, 1)
    assert r["aut"]["order"] == 6 and r["regular"]


def test_analyze_general_map(capsys):
    from examples_data import TORUS_FACES, TORUS_X, TORUS_Y

    code, env = run_json(capsys, "analyze", "--x", TORUS_X, "--y", TORUS_Y, "--degree", "24")
    assert code == 0
    assert env["result"]["face_circuits"] == TORUS_FACES
    assert env["result"]["profile"]["map_type"] == [3, 6]


def test_analyze_bad_input(capsys):
    code, env = run_json(capsys, "analyze", "--k", "3", "--y", "(0 3)(1 4")
    assert code == 1 and "error" in env
    code, _, err = run(capsys, "analyze", "--k", "3")
    assert code == 1 and err.startswith("error:")


def test_census_text_and_json_agree(capsys):
    code, text, _ = run(capsys, "census", "--k", "20")
    assert code == 0
    _, env = run_json(capsys, "census", "--k", "20")
    for row in env["result"]["rows"]:
        assert row["nu_bar"] in text and row["nu"] in text
    top = env["result"]["rows"][-1]
    assert int(top["nu_bar"]) == census.double_factorial(39)


def test_census_oracle_and_reps(capsys):
    code, env = run_json(capsys, "census", "--k", "3", "--oracle", "--reps")
    assert code == 0 and env["warnings"] == []
    rows = {r["p"]: r for r in env["result"]["rows"]}
    assert all(r["match"] for r in rows.values())
    assert rows[1]["representatives"] == ["(0 3)(1 4)(2 5)"]


def test_census_cap_error(capsys):
    code, env = run_json(capsys, "census", "--k", "9", "--oracle")
    assert code == 1 and "cap" in env["error"]
    code, env = run_json(capsys, "census", "--k", "8", "--oracle", "--brute-cap", "6")
    assert code == 1


def test_classify_single(capsys):
    code, env = run_json(capsys, "classify", "--k", "7", "--t", "2")
    r = env["result"]
    assert code == 0 and r["verdict"] == "KleinQuartic" and r["aut_surface"]["order"] == 168
    code, text, _ = run(capsys, "classify", "--k", "7", "--t", "2")
    assert "PSL2(7) (order 168)" in text


def test_classify_scan(capsys):
    code, env = run_json(capsys, "classify", "--scan", "3")
    entries = env["result"]["entries"]
    assert len(entries) == 9
    assert [(e["k"], e["t"]) for e in entries][:3] == [(5, 1), (6, 1), (8, 3)]


def test_classify_usage(capsys):
    code, env = run_json(capsys, "classify", "--k", "7")
    assert code == 1 and "exactly one" in env["error"]
    code, env = run_json(capsys, "classify", "--k", "7", "--t", "3")
    assert code == 1 and "regular" in env["error"]


def test_env_defaults(capsys, monkeypatch):
    monkeypatch.setenv("UNIMAP_FORMAT", "json")
    monkeypatch.setenv("UNIMAP_K", "7")
    monkeypatch.setenv("UNIMAP_T", "1")
    code, out, _ = run(capsys, "classify")
    assert code == 0 and json.loads(out)["result"]["verdict"] == "WimanI"
    # an explicit flag wins over the environment
    code, out, _ = run(capsys, "classify", "--t", "2", "--format", "text")
    assert code == 0 and "KleinQuartic" in out


def test_verify(capsys):
    code, env = run_json(capsys, "verify", "--kmax", "4")
    assert code == 0 and env["result"]["passed"]
    assert {s["suite"] for s in env["result"]["suites"]} == {
        "partition", "oracle", "generator", "table1", "table2", "genus",
    }
    code, env = run_json(capsys, "verify", "--kmax", "9")
    assert code == 1 and "cap" in env["error"]


def test_verify_detects_tampered_formula():
    def tampered(k, p):
        v = census.nu_bar(k, p)
        return v + 1 if (k, p) == (4, 4) else v

    r = verify.partition_identity(8, tampered)
    assert not r.passed and "k=4" in r.failure
    assert not verify.oracle_equality(4, tampered).passed
    assert not verify.generator_completeness(4, tampered).passed
    assert any(not s.passed for s in verify.run_all(4, tampered))


def test_console_script():
    out = subprocess.run(
        [sys.executable, "-m", "unimap.cli", "classify", "--k", "12", "--t", "3", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout)["result"]["verdict"] == "WimanIII"
