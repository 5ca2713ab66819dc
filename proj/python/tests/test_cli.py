import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("FORESTMAPS_CLI", "forestmaps")


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("FORESTMAPS_DIGITS", None)
    e.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=e)


def envelope(out):
    doc = json.loads(out)
    assert doc["tool"] == "forestmaps"
    assert doc["version"].count(".") == 2
    assert doc["tag"]
    assert "config" in doc and "result" in doc
    return doc


def test_coeffs_json():
    r = run("coeffs", "--p", "3", "--order", "4", "--series", "F")
    assert r.returncode == 0
    doc = envelope(r.stdout)
    assert doc["config"]["p"] == 3
    row = doc["result"]["series"][0]["coeffs"][4]
    assert row["pretty"] == "(140+234u+144u^2+32u^3)"


def test_coeffs_csv_header():
    r = run("coeffs", "--p", "4", "--order", "4", "--format", "csv")
    assert r.returncode == 0
    rows = list(csv.reader(io.StringIO(r.stdout)))
    assert rows[0] == ["series", "n", "u_power", "coeff"]
    assert ["F", "4", "1", "9"] in rows


def test_verify_all():
    r = run("verify", "--all", "--order", "12")
    assert r.returncode == 0
    doc = envelope(r.stdout)
    assert doc["tag"]


def test_verify_perturbed_is_caught():
    r = run("verify", "--identity", "phi_second", "--perturb", "3")
    assert r.returncode == 0


def test_radius_csv():
    r = run("radius", "--p", "4", "--u", "1", "--u", "-1", "--format", "csv")
    assert r.returncode == 0
    rows = list(csv.DictReader(io.StringIO(r.stdout)))
    assert len(rows) == 2
    assert abs(float(rows[0]["rho"]) - 0.028326978918119311) < 1e-15
    assert abs(float(rows[1]["rho"]) - 0.045944074618482671) < 1e-15


def test_digits_env_sets_default_only():
    r = run("radius", "--p", "4", "--u", "1", env={"FORESTMAPS_DIGITS": "30"})
    assert envelope(r.stdout)["config"]["precision"]["digits"] == 30
    r = run("radius", "--p", "4", "--u", "1", "--digits", "40", env={"FORESTMAPS_DIGITS": "30"})
    assert envelope(r.stdout)["config"]["precision"]["digits"] == 40


@pytest.mark.parametrize(
    "args",
    [
        ["--bogus"],
        ["coeffs", "--p", "2"],
        ["coeffs", "--order", "70"],
        ["radius", "--p", "5", "--u", "1"],
        ["coeffs", "--format", "text"],
        ["verify", "--identity", "nope"],
    ],
)
def test_bad_flags(args):
    assert run(*args).returncode == 2


def test_scale_guard():
    assert run("oracle", "--p", "4", "--n", "9").returncode == 3


def test_non_convergence():
    assert run("radius", "--p", "4", "--u", "0.005", "--digits", "20").returncode == 4


def test_mu_expand():
    r = run("mu-expand", "--p", "3", "--order", "6", "--series", "S_tilde")
    assert r.returncode == 0
    envelope(r.stdout)


def test_repro_single():
    r = run("repro", "--criteria", "1")
    assert r.returncode == 0
    assert r.stdout.startswith("[PASS] 1")
