"""Command-line interface: exit codes, round-trips, determinism."""

import json

import pytest

from braucas.cli import main, EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_POLE, \
    EXIT_NONCENTRAL
from braucas.tensor import ActionConfig
from braucas.liealg import build_basis, hc_image
from braucas.casimir import theorem_spec, build_casimir


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_success(capsys):
    code, out, _ = run(capsys, "build", "--family", "o", "--N", "3",
                       "--projector", "sym", "--k", "1")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["family"] == "o" and data["m"] == 2
    assert data["shifts"] == ["0", "-1"]
    assert data["terms"]


def test_build_usage_error_odd_symplectic(capsys):
    code, _, err = run(capsys, "build", "--family", "sp", "--N", "5",
                       "--projector", "sym", "--k", "1")
    assert code == EXIT_USAGE
    assert "even" in err


def test_build_pole_exit(capsys):
    code, _, err = run(capsys, "build", "--family", "sp", "--N", "4",
                       "--projector", "sym", "--m", "4", "--no-omega-limit")
    assert code == EXIT_POLE
    assert "pole" in err.lower()


def test_build_pole_region_ok_with_limit(capsys):
    code, out, _ = run(capsys, "build", "--family", "sp", "--N", "4",
                       "--projector", "sym", "--k", "2")
    assert code == EXIT_OK
    assert json.loads(out)["terms"]


def test_hc_roundtrip_matches_in_process(capsys, tmp_path):
    code, out, _ = run(capsys, "build", "--family", "o", "--N", "3",
                       "--projector", "sym", "--k", "1")
    assert code == EXIT_OK
    path = tmp_path / "elt.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "hc", "--input", str(path))
    assert code == EXIT_OK
    reported = json.loads(out2)

    spec = theorem_spec("o", "sym", 1, 3)
    basis = build_basis(spec.cfg)
    chi = hc_image(basis, build_casimir(spec), check=True).trim()
    from braucas.scalars import MPoly
    assert MPoly.from_json(reported["chi"]).trim() == chi


def test_hc_noncentral_exit(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "family": "o", "N": 3, "shifts": ["0"],
        "terms": [{"mono": [[1, 1]], "coeff": "1"}]}))
    code, _, err = run(capsys, "hc", "--input", str(path))
    assert code == EXIT_NONCENTRAL
    assert "not central" in err


def test_build_deterministic(capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "build", "--family", "sp", "--N", "4",
                           "--projector", "asym", "--m", "2")
        assert code == EXIT_OK
        outs.append(out)
    assert outs[0] == outs[1]


def test_verify_single_instance(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "theorems",
                       "--family", "sp", "--N", "4", "--k", "2")
    assert code == EXIT_OK
    assert "ALL PASS" in out


def test_verify_suites_quick(capsys):
    for suite, extra in [("liealg", []), ("symfun", []),
                         ("brauer", ["--m", "3"]), ("lemma", [])]:
        code, out, _ = run(capsys, "verify", "--suite", suite, *extra)
        assert code == EXIT_OK, (suite, out)
        assert "FAIL" not in out


def test_verify_report_file(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "--suite", "theorems",
                     "--family", "o", "--N", "3", "--k", "1",
                     "--report", str(report))
    assert code == EXIT_OK
    data = json.loads(report.read_text())
    assert data and all(r["pass"] for r in data)
    assert data[0]["statement"].endswith("-theorem")


def test_build_explicit_shifts(capsys):
    code, out, _ = run(capsys, "build", "--family", "o", "--N", "3",
                       "--projector", "sym", "--m", "2",
                       "--shifts", "1/2,-1/2")
    assert code == EXIT_OK
    assert json.loads(out)["shifts"] == ["1/2", "-1/2"]


def test_bad_shift_count(capsys):
    code, _, err = run(capsys, "build", "--family", "o", "--N", "3",
                       "--projector", "sym", "--m", "2", "--shifts", "1")
    assert code == EXIT_USAGE
