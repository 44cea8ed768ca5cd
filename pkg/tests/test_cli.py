import csv
import io
import json
import shutil
import subprocess
import sys

import pytest

from pisot_palette.cli import run_cli
from pisot_palette.errors import NotComplex, ParseError


def run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_base(capsys):
    code, out, _ = run(capsys, "check-base", "1", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["property_F"] and doc["is_tribonacci"]
    code, _, err = run(capsys, "check-base", "4", "-4")
    assert code == NotComplex.code
    assert json.loads(err)["error"] == "NotComplex"


def test_spectra_csv(capsys):
    code, out, _ = run(capsys, "spectra", "--a", "1", "--b", "1", "--m-range", "2..2")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    assert abs(float(rows[0]["ell"]) - 0.544) < 1e-3
    assert abs(float(rows[0]["L"]) - 1.384) < 1e-3


def test_palette_json_and_svg(capsys, tmp_path):
    svg = tmp_path / "cards.svg"
    code, out, _ = run(capsys, "palette", "--a", "1", "--b", "1", "--m", "2", "--svg", str(svg))
    assert code == 0
    doc = json.loads(out)
    assert len(doc["palette"]) == 7
    assert doc["window"]["c"] == ["1/1", "0/1", "1/1"]
    assert svg.read_text().lstrip().startswith("<?xml")
    code, out2, _ = run(capsys, "palette", "--a", "1", "--b", "1", "--c", "beta^2 + 1")
    assert out2 == out


def test_render_roundtrip(capsys, tmp_path):
    pj = tmp_path / "p.json"
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(capsys, "palette", "--a", "1", "--b", "1", "--c", "beta^2", "--out", str(pj), "--svg", str(a))[0] == 0
    assert run(capsys, "render", "--input", str(pj), "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_parse_error_exit(capsys):
    code, _, err = run(capsys, "palette", "--a", "1", "--b", "1", "--c", "beta^^2")
    assert code == ParseError.code
    assert json.loads(err)["position"] == 5


def test_bad_range(capsys):
    code, _, err = run(capsys, "spectra", "--a", "1", "--b", "1", "--m-range", "3..1")
    assert code != 0 and "InvalidRange" in err


def test_density_and_plot(capsys, tmp_path):
    plot = tmp_path / "d.svg"
    code, out, _ = run(capsys, "density", "--a", "4", "--b", "0", "--m", "1", "--levels", "4", "--plot", str(plot))
    assert code == 0 and plot.exists()
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(r["level"]) for r in rows] == [0, 1, 2, 3]


def test_sweep_csv_and_table(capsys):
    code, out, _ = run(capsys, "sweep", "--a", "1", "--b", "1", "--b0", "beta^2", "--c0", "beta^3",
                       "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 30
    code, out, _ = run(capsys, "tribo-table")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 9 and rows[0]["interval"] == "beta^2"


@pytest.mark.skipif(shutil.which("pisot-palette") is None, reason="console script not installed")
def test_console_script_is_deterministic(tmp_path):
    cmd = ["pisot-palette", "spectra", "--a", "1", "--b", "1", "--m-range", "1..3"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.count(b"\n") == 4
    mod = subprocess.run([sys.executable, "-m", "pisot_palette.cli", "check-base", "4", "-4"],
                         capture_output=True)
    assert mod.returncode == NotComplex.code
