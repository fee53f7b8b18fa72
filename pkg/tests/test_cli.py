"""CLI: formats, determinism, exit codes, config precedence."""

import json
import subprocess
import sys

import pytest

CLI = [sys.executable, "-m", "swanson.cli"]


def run(*args, **kw):
    return subprocess.run(CLI + list(args), capture_output=True, text=True, **kw)


def test_spectrum_csv_shape_and_metadata():
    r = run("spectrum")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    meta = [l for l in lines if l.startswith("# ")]
    body = [l for l in lines if not l.startswith("#")]
    assert any(l.startswith("# model=rosen-morse") for l in meta)
    assert body[0] == "n,E_closed,E_shape_invariance,E_numeric,abs_diff,admissible"
    assert len(body) >= 2  # header plus at least the ground state


def test_spectrum_json_is_valid():
    r = run("spectrum", "--format", "json")
    assert r.returncode == 0
    obj = json.loads(r.stdout)
    assert obj["columns"][0] == "n"
    assert obj["config"]["model"] == "rosen-morse"
    assert len(obj["rows"]) >= 1


def test_output_is_byte_deterministic(tmp_path):
    f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
    for f in (f1, f2):
        r = run("spectrum", "--epsilon", "10", "--out", str(f))
        assert r.returncode == 0
    assert f1.read_bytes() == f2.read_bytes()
    assert b"\r" not in f1.read_bytes()  # LF endings


def test_floats_are_emitted_at_full_precision():
    r = run("spectrum")
    # 17 significant digits: the ground level has a long mantissa
    assert "-1.6818938278306328" in r.stdout


def test_invalid_rm_config_exits_2_and_names_inequality():
    r = run("spectrum", "--alpha", "20")
    assert r.returncode == 2
    assert "8*eps - 4*omega + a^2 mu^2 (9*omega - 4*alpha) > 0" in r.stderr


def test_invalid_screened_config_exits_2_and_names_inequality():
    r = run("spectrum", "--model", "screened", "--alpha", "5")
    assert r.returncode == 2
    assert "9*omega - 4*alpha > 0" in r.stderr


def test_screened_wavefunction_without_bound_state_exits_2():
    r = run("wavefunction", "--model", "screened")  # alpha=0.5: no bound state
    assert r.returncode == 2
    assert "no" in r.stderr.lower()


def test_config_file_overrides_defaults(tmp_path):
    cfgfile = tmp_path / "run.cfg"
    cfgfile.write_text("epsilon = 10\nalpha = 0.25\n")
    r = run("spectrum", "--config", str(cfgfile))
    assert r.returncode == 0
    assert "# epsilon=10" in r.stdout
    assert "# alpha=0.25" in r.stdout


def test_flags_override_config_file(tmp_path):
    cfgfile = tmp_path / "run.cfg"
    cfgfile.write_text("alpha = 0.25\n")
    r = run("spectrum", "--config", str(cfgfile), "--alpha", "0.5")
    assert r.returncode == 0
    assert "# alpha=0.5" in r.stdout


def test_malformed_config_file_exits_2(tmp_path):
    cfgfile = tmp_path / "bad.cfg"
    cfgfile.write_text("this is not a key value pair\n")
    r = run("spectrum", "--config", str(cfgfile))
    assert r.returncode == 2


def test_wavefunction_ladder_matches_closed_form():
    r = run("wavefunction", "-n", "0", "--samples", "101", "--format", "json")
    assert r.returncode == 0
    obj = json.loads(r.stdout)
    cols = obj["columns"]
    ratio_idx = cols.index("ratio")
    ratios = [row[ratio_idx] for row in obj["rows"]
              if row[ratio_idx] is not None and abs(row[ratio_idx]) > 0]
    lo, hi = min(ratios), max(ratios)
    assert hi - lo < 1e-7 * max(1.0, abs(hi))


def test_verify_exits_zero_on_default_config(tmp_path):
    out = tmp_path / "report.json"
    r = run("verify", "--out", str(out))
    assert r.returncode == 0
    rep = json.loads(out.read_text())
    assert rep["passed"] is True
    assert any(c["name"] == "factorization_identity" for c in rep["checks"])


def test_scan_flags_empty_admissible_region():
    r = run("scan", "--model", "screened", "--param", "alpha",
            "--start", "0.1", "--stop", "0.4", "--num", "4", "--nmax", "0")
    assert r.returncode == 0
    assert "warning=empty admissible region" in r.stdout


def test_scan_covers_requested_grid():
    r = run("scan", "--param", "epsilon", "--start", "2", "--stop", "10",
            "--num", "5", "--nmax", "1")
    assert r.returncode == 0
    body = [l for l in r.stdout.splitlines() if not l.startswith("#")]
    # header + 5 values x 2 levels
    assert len(body) == 1 + 5 * 2
