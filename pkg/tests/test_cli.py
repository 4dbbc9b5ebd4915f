import json
import subprocess
import sys

import pytest

from lruled.cli import main
from lruled.surface import surface_to_definition
from lruled.catalog import get_surface


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    assert out == "helicoid-1\nhelicoid-2\nhelicoid-3\n"


def test_verify_helicoid_2(capsys, tmp_path):
    report = tmp_path / "report.csv"
    code, out, err = run_cli(
        capsys,
        "verify", "--surface", "helicoid-2",
        "--u-samples", "21", "--v-samples", "17",
        "--output", str(report),
    )
    assert code == 0
    line = next(ln for ln in out.splitlines() if ln.startswith("max_abs_diff="))
    assert float(line.split("=", 1)[1]) <= 1e-8
    rows = report.read_text().strip().split("\n")
    assert rows[0] == "u,v,class,P,K_forms,K_lamarle,abs_diff,rel_diff,status"
    assert len(rows) == 1 + 21 * 17
    assert all(row.endswith(",ok") for row in rows[1:])


def test_verify_exit_3_on_impossible_tolerance(capsys):
    code, out, err = run_cli(
        capsys,
        "verify", "--surface", "helicoid-2",
        "--u-samples", "9", "--v-samples", "9",
        "--tolerance", "1e-30", "--output", "/dev/null",
    )
    assert code == 3
    assert "tolerance-exceeded" in err


def test_corrupted_definition_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{definitely not json")
    code, _, err = run_cli(capsys, "classify", "--definition", str(bad))
    assert code == 2
    assert "error[bad-definition]" in err


def test_unknown_definition_keys_exit_2(capsys, tmp_path):
    doc = surface_to_definition(get_surface("helicoid-2").surface)
    doc["surprise"] = True
    bad = tmp_path / "extra.json"
    bad.write_text(json.dumps(doc))
    code, _, err = run_cli(capsys, "drall", "--definition", str(bad))
    assert code == 2
    assert "surprise" in err


def test_unknown_surface_exits_2(capsys):
    code, _, err = run_cli(capsys, "classify", "--surface", "helix")
    assert code == 2
    assert "error[unknown-surface]" in err


def test_multiple_sources_rejected(capsys):
    code, _, err = run_cli(
        capsys, "drall", "--surface", "helicoid-1", "--base", "0,u,0", "--director", "1,0,0"
    )
    assert code == 2
    assert "error[bad-config]" in err


def test_drall_helicoid_1(capsys):
    code, out, _ = run_cli(capsys, "drall", "--surface", "helicoid-1", "--u-samples", "50")
    assert code == 0
    rows = out.strip().split("\n")
    assert rows[0] == "u,P"
    assert len(rows) == 51
    for row in rows[1:]:
        assert abs(float(row.split(",")[1]) - 1.0) <= 1e-10


def test_classify_prints_class(capsys):
    code, out, _ = run_cli(capsys, "classify", "--surface", "helicoid-3", "--u-samples", "5")
    assert code == 0
    assert "class=M2_TimelikeSpacelikeBaseTimelikeRuling" in out
    rows = [ln for ln in out.splitlines() if not ln.startswith("class=")]
    assert rows[0] == "u,base_tangent,ruling"
    assert rows[1].endswith("spacelike,timelike")


def test_frame_table(capsys):
    code, out, _ = run_cli(capsys, "frame", "--surface", "helicoid-2", "--u-samples", "4")
    assert code == 0
    rows = out.strip().split("\n")
    assert rows[0] == "u,e1,e2,e3,n1,n2,n3,xi1,xi2,xi3,kappa,tau,frame_type"
    assert len(rows) == 5
    assert rows[1].endswith("SpaceTimeSpace")


def test_striction_table(capsys):
    code, out, _ = run_cli(capsys, "striction", "--surface", "helicoid-1", "--u-samples", "5")
    assert code == 0
    rows = out.strip().split("\n")
    assert rows[0] == "u,x1,x2,x3"
    for row in rows[1:]:
        u, x1, x2, x3 = (float(c) for c in row.split(","))
        assert (x1, x2) == (0.0, 0.0)
        assert x3 == pytest.approx(u, abs=1e-12)


def test_curvature_table_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "curvature", "--surface", "helicoid-3",
        "--u-samples", "3", "--v-samples", "3", "--format", "json",
    )
    assert code == 0
    records = json.loads(out)
    assert len(records) == 9
    assert set(records[0]) == {"u", "v", "K_forms"}


def test_mesh_counts(capsys):
    code, out, _ = run_cli(
        capsys, "mesh", "--surface", "helicoid-3", "--u-samples", "7", "--v-samples", "5"
    )
    assert code == 0
    lines = out.strip().split("\n")
    vertices = [ln for ln in lines if ln.startswith("v ")]
    faces = [ln for ln in lines if ln.startswith("f ")]
    assert len(vertices) == 7 * 5
    assert len(faces) == 6 * 4
    assert all(len(ln.split()) == 4 for ln in vertices)
    assert all(len(ln.split()) == 5 for ln in faces)
    indices = {int(tok) for ln in faces for tok in ln.split()[1:]}
    assert min(indices) == 1 and max(indices) == 35


def test_mesh_rejects_csv_format(capsys):
    code, _, err = run_cli(capsys, "mesh", "--surface", "helicoid-1", "--format", "csv")
    assert code == 2
    assert "error[bad-config]" in err


def test_obj_rejected_for_tables(capsys):
    code, _, err = run_cli(capsys, "drall", "--surface", "helicoid-1", "--format", "obj")
    assert code == 2


def test_inline_surface(capsys):
    # values starting with '-' use the --flag=value spelling
    code, out, _ = run_cli(
        capsys,
        "drall",
        "--base=0,u,0",
        "--director=-cosh(u),0,-sinh(u)",
        "--u-samples", "5",
    )
    assert code == 0
    for row in out.strip().split("\n")[1:]:
        assert abs(float(row.split(",")[1]) - 1.0) <= 1e-10


def test_random_class_source(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--random-class", "m2", "--seed", "3",
        "--u-samples", "7", "--v-samples", "5", "--output", "/dev/null",
    )
    assert code == 0


def test_range_overrides(capsys):
    code, out, _ = run_cli(
        capsys,
        "curvature", "--surface", "helicoid-3",
        "--u-range=-0.5:0.5", "--v-range=-1:1",
        "--u-samples", "3", "--v-samples", "3",
    )
    assert code == 0
    rows = out.strip().split("\n")[1:]
    us = sorted({float(r.split(",")[0]) for r in rows})
    assert us == [-0.5, 0.0, 0.5]


def test_byte_identical_reruns(capsys):
    args = (
        "verify", "--random-class", "m1", "--seed", "9",
        "--u-samples", "5", "--v-samples", "5", "--format", "json",
    )
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_output_file_written(capsys, tmp_path):
    target = tmp_path / "mesh.obj"
    code, out, _ = run_cli(
        capsys,
        "mesh", "--surface", "helicoid-2",
        "--u-samples", "3", "--v-samples", "3", "--output", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("v ")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lruled", "list"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "helicoid-1\nhelicoid-2\nhelicoid-3\n"


def test_help_exits_zero():
    proc = subprocess.run(
        [sys.executable, "-m", "lruled", "--help"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "verify" in proc.stdout
