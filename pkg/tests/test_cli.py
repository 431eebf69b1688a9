"""Command-line interface: report shapes, formats, exit codes, determinism."""

import csv
import io
import json
import math

import pytest

from ckgeom.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, out


def test_classify_example(capsys):
    status, out = run(capsys, "classify", "--k1", "0", "--k2", "-1")
    assert status == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    entry = doc["geometries"][0]
    assert entry["name"] == "minkowskian"
    assert entry["group"] == "ISO(1,1)"
    assert entry["h0"] == "SO(1,1)"
    assert entry["h01"] == "R"


def test_phs_example(capsys):
    status, out = run(capsys, "phs", "--kind", "first", "--k1", "1", "--k2", "1", "--a2", "0.5")
    assert status == 0
    doc = json.loads(out)
    value = doc["phs"][0]["bracket"]
    assert value == pytest.approx(0.1 * math.tan(0.5), abs=1e-15)


def test_classify_defaults_to_the_full_grid(capsys):
    status, out = run(capsys, "classify")
    assert status == 0
    assert len(json.loads(out)["geometries"]) == 9


def test_sweep_all_report_shape(capsys):
    status, out = run(capsys, "sweep-all", "--grid", "normalized9", "--z", "0.1", "--samples", "4")
    assert status == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["passed"] is True
    names = {c["name"] for c in doc["checks"]}
    assert len(names) == len(doc["checks"])
    for suite, row in doc["suites"].items():
        assert {"max_defect", "passed"} <= set(row)
    suites = {c["suite"] for c in doc["checks"]}
    assert suites == set(doc["suites"])


def test_sweep_all_is_byte_deterministic(capsys):
    a = run(capsys, "sweep-all", "--samples", "4", "--seed", "3")
    b = run(capsys, "sweep-all", "--samples", "4", "--seed", "3")
    assert a == b
    c = run(capsys, "sweep-all", "--samples", "4", "--seed", "4")
    assert c[1] != a[1]


def test_tolerance_override_fails_the_run(capsys):
    status, out = run(
        capsys, "sweep-all", "--samples", "4", "--tol-geometry-curvature", "1e-18"
    )
    assert status == 1
    doc = json.loads(out)
    assert doc["passed"] is False
    row = next(c for c in doc["checks"] if c["name"] == "geometry_curvature")
    assert row["tolerance"] == 1e-18
    assert not row["passed"]


def test_unknown_tolerance_is_a_config_error(capsys):
    assert main(["sweep-all", "--tol-nonsense", "1"]) == 2


def test_mismatched_kappa_flags_are_a_config_error(capsys):
    assert main(["classify", "--k1", "1"]) == 2


def test_zero_z_is_a_config_error(capsys):
    assert main(["sweep-all", "--z", "0"]) == 2


def test_csv_format(capsys):
    status, out = run(capsys, "bracket", "--k1", "1", "--k2", "-1", "--format", "csv")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["x"] == "J01"
    assert "\r" not in out
    # dot-decimal floats, comma separation
    assert rows[0]["k1"] == "1.0"


def test_convert_domain_error_becomes_report_entry(capsys):
    status, out = run(
        capsys,
        "convert",
        "--k1", "1", "--k2", "1",
        "--from", "ambient", "--to", "polar",
        "--coords", "1,0,0",
    )
    assert status == 0
    doc = json.loads(out)
    assert "ChartDomainError" in doc["conversion"]["error"]


def test_curvature_matches_the_label(capsys):
    status, out = run(capsys, "curvature", "--k1", "-1", "--k2", "1", "--coords", "0.2,0.3")
    assert status == 0
    doc = json.loads(out)
    assert doc["curvature"]["curvature"] == pytest.approx(-1.0, abs=1e-6)


def test_duality_report_lists_all_maps(capsys):
    status, out = run(capsys, "duality", "--k1", "1", "--k2", "1")
    assert status == 0
    doc = json.loads(out)
    assert len(doc["dualities"]) == 6
    assert all(d["morphism_defect"] == 0.0 for d in doc["dualities"])


def test_geodesics_csv_has_truncation_column(capsys):
    status, out = run(
        capsys,
        "export-geodesics",
        "--k1", "1", "--k2", "1",
        "--chart", "parallel1",
        "--points", "9", "--lines", "3", "--span", "0.8",
        "--format", "csv",
    )
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert set(rows[0]) == {"family", "t", "beltrami1", "beltrami2", "truncated"}
    truncated = [r for r in rows if r["truncated"] == "true"]
    regular = [r for r in rows if r["truncated"] == "false"]
    assert truncated and regular
    assert all(r["beltrami1"] == "" for r in truncated)
    float(regular[0]["beltrami1"])


def test_geodesics_sphere_rays_pass_through_the_origin(capsys):
    status, out = run(
        capsys,
        "export-geodesics",
        "--k1", "1", "--k2", "1",
        "--chart", "polar", "--points", "3", "--lines", "2",
    )
    doc = json.loads(out)
    starts = [r for r in doc["points"] if r["t"] == 0.0 and "line1" in r["family"]]
    assert starts
    for row in starts:
        assert row["beltrami1"] == 0.0
        assert abs(row["beltrami2"]) == 0.0


def test_euclidean_grid_is_straight(capsys):
    status, out = run(
        capsys,
        "export-geodesics",
        "--k1", "0", "--k2", "1",
        "--chart", "parallel1", "--points", "5", "--lines", "2",
    )
    doc = json.loads(out)
    by_family = {}
    for row in doc["points"]:
        by_family.setdefault(row["family"], []).append(row)
    for family, rows in by_family.items():
        if "line1" in family:
            assert len({r["beltrami2"] for r in rows}) == 1
        else:
            assert len({r["beltrami1"] for r in rows}) == 1


def test_out_flag_writes_the_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    status = main(["classify", "--k1", "1", "--k2", "1", "--out", str(target)])
    assert status == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(target.read_text())
    assert doc["geometries"][0]["name"] == "spherical"
