import csv
import io
import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from ginimre.cli import main
from ginimre.distortion import dw
from ginimre.io import fixture_path, load_eu, read_matrix, read_sample
from ginimre.mre import MREPolyline

SPOT_CELLS = [
    (2000, "Austria", 78.2, 43826),
    (2000, "Bulgaria", 71.6, 9537),
    (2000, "Latvia", 69.5, 12061),
    (2000, "Luxembourg", 78.0, 89924),
    (2015, "Luxembourg", 82.4, 103760),
    (2015, "Ireland", 81.5, 69134),
    (2015, "Spain", 83.0, 34929),
    (2015, "Romania", 75.4, 21599),
]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def usage(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    return exc.value.code, capsys.readouterr().err


@pytest.fixture
def csvfile(tmp_path):
    def make(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


# ---------------------------------------------------------------- fixtures

@pytest.mark.parametrize("year,country,life,gdp", SPOT_CELLS)
def test_fixture_cells(year, country, life, gdp):
    M = load_eu(year)
    row = M.data[M.labels.index(country)]
    assert row[0] == life and row[1] == gdp


def test_fixture_shape():
    for year in (2000, 2015):
        M = load_eu(year)
        assert (M.n, M.d) == (28, 2) and len(set(M.labels)) == 28
        assert M.columns == ("life_expectancy", "gdp_per_capita")


def test_read_helpers(csvfile):
    M = read_matrix(csvfile("m.csv", "a,b\n1,2\n3,4\n"))
    assert M.labels is None and M.data.tolist() == [[1, 2], [3, 4]]
    assert list(read_sample(csvfile("s.csv", "x\n3\n1\n2\n")).sorted) == [1, 2, 3]
    assert list(read_sample(csvfile("t.csv", "3\n1\n")).sorted) == [1, 3]


# ---------------------------------------------------------------- gini

def test_gini_life_marginal(capsys):
    code, out, _ = run(capsys, "gini", "eu2000.csv", "--p", "1,0", "--distortion", "dw:0.5")
    assert code == 0
    rec = json.loads(out)
    assert len(rec) == 1
    life = np.array([float(r[1]) for r in csv.reader(open(fixture_path("eu2000")))
                     if r[1] != "life_expectancy"])
    ref = np.abs(life[:, None] - life[None, :]).sum() / (2 * 28 ** 2)
    assert rec[0]["absolute"] == pytest.approx(ref, rel=1e-12)
    assert rec[0]["relative"] == pytest.approx(ref / life.mean(), rel=1e-12)


def test_gini_per_attribute_csv(capsys):
    code, out, _ = run(capsys, "gini", "eu2015.csv", "--alpha-grid", "1/2,1/7", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["target"] for r in rows] == ["life_expectancy", "gdp_per_capita"] * 2
    assert float(rows[2]["absolute"]) > float(rows[0]["absolute"])


def test_gini_trivial_files(capsys, csvfile):
    const = csvfile("c.csv", "id,a,b\nx,2,5\ny,2,5\nz,2,5\n")
    code, out, _ = run(capsys, "gini", const, "--distortion", "dw:0.3,zonoid:0.4")
    assert code == 0 and all(r["absolute"] == pytest.approx(0, abs=1e-12) for r in json.loads(out))
    one = csvfile("o.csv", "a,b\n3,4\n")
    code, out, _ = run(capsys, "gini", one, "--mode", "relative")
    assert code == 0 and all(r["relative"] == 0 for r in json.loads(out))


def test_gini_errors(capsys, csvfile):
    code, _, err = run(capsys, "gini", "missing.csv")
    assert code == 1 and "missing.csv" in err
    code, _, err = run(capsys, "gini", "eu2000.csv", "--distortion", "dw:7")
    assert code == 1
    code, err = usage(capsys, "gini", "eu2000.csv", "--p", "1,-1")
    assert code == 2
    bad = csvfile("b.csv", "a,b\n1,2\n3\n")
    assert run(capsys, "gini", bad)[0] == 1


# ---------------------------------------------------------------- mre

def test_mre_json_roundtrip(capsys, tmp_path):
    out_path = tmp_path / "m.json"
    code, _, _ = run(capsys, "mre", "eu2015.csv", "--distortion", "dw:0.5", "--out", str(out_path))
    assert code == 0
    obj = json.loads(out_path.read_text())[0]
    poly = MREPolyline.from_dict(obj)
    from ginimre.mre import mre_2d
    np.testing.assert_array_equal(poly.vertices, mre_2d(load_eu(2015), dw(0.5)).vertices)
    assert obj["rays"] == {"left_vertical": True, "right_horizontal": True}


def test_mre_single_point(capsys, csvfile):
    code, out, _ = run(capsys, "mre", csvfile("p.csv", "a,b\n1.5,2.5\n"))
    assert code == 0 and json.loads(out)[0]["vertices"] == [[1.5, 2.5]]


def test_mre_csv(capsys):
    code, out, _ = run(capsys, "mre", "eu2000.csv", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["x", "y"] and len(rows) > 2
    code, out, _ = run(capsys, "mre", "eu2000.csv", "eu2015.csv", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["dataset", "distortion", "x", "y"]
    assert {r[0] for r in rows[1:]} == {"eu2000.csv", "eu2015.csv"}


def test_mre_svg(capsys, tmp_path):
    path = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "mre", "eu2000.csv", "eu2015.csv", "--alpha-grid", "1/2,3/14",
                     "--format", "svg", "--out", str(path))
    assert code == 0
    root = ET.fromstring(path.read_text())
    assert root.get("width") == "800" and root.get("height") == "600"
    ns = {"s": "http://www.w3.org/2000/svg"}
    assert len(root.findall(".//s:polyline", ns)) == 4
    assert len(root.findall(".//s:circle", ns)) == 56
    assert "(1000)" in path.read_text()


def test_mre_three_d(capsys, csvfile):
    rng = np.random.default_rng(0)
    body = "\n".join(",".join(f"{x:.6f}" for x in row) for row in rng.random((10, 3)))
    f = csvfile("d3.csv", "a,b,c\n" + body + "\n")
    code, out, _ = run(capsys, "mre", f, "--directions", "100")
    assert code == 0 and len(json.loads(out)[0]["values"]) == 100
    code, err = usage(capsys, "mre", f, "--format", "svg")
    assert code == 2 and "support" in err


# ---------------------------------------------------------------- dominate

def test_dominate_eu(capsys):
    code, out, _ = run(capsys, "dominate", "eu2015.csv", "eu2000.csv",
                       "--distortion", "dw:0.5,dw:0.2142857")
    rep = json.loads(out)
    assert code == 0 and rep["holds"] and all(v["exact"] for v in rep["verdicts"])
    code, out, _ = run(capsys, "dominate", "eu2000.csv", "eu2015.csv",
                       "--distortion", "dw:0.5,dw:0.2142857")
    rep = json.loads(out)
    assert code == 3 and not rep["holds"]
    assert all(len(v["witness"]) == 2 for v in rep["verdicts"])


def test_dominate_self_and_interval(capsys):
    code, out, _ = run(capsys, "dominate", "eu2000.csv", "eu2000.csv", "--alpha-grid", "1/2")
    assert code == 0 and json.loads(out)["verdicts"][0]["worst_margin"] == 0
    code, out, _ = run(capsys, "dominate", "eu2000.csv", "eu2015.csv", "--p-interval", "0:0")
    assert code == 3
    assert usage(capsys, "dominate", "eu2000.csv", "eu2015.csv", "--p-interval", "x")[0] == 2


def test_dominate_direction_file(capsys, csvfile):
    dirs = csvfile("p.csv", "p1,p2\n1,0\n")
    code, out, _ = run(capsys, "dominate", "eu2015.csv", "eu2000.csv", "--p-directions", dirs)
    assert code == 0 and json.loads(out)["verdicts"][0]["exact"] is False


def test_dominate_dimension_mismatch(capsys, csvfile):
    f = csvfile("x.csv", "a,b,c\n1,2,3\n")
    assert run(capsys, "dominate", "eu2000.csv", f)[0] == 1


# ---------------------------------------------------------------- sd

def test_sd_commands(capsys, csvfile):
    a = csvfile("a.csv", "x\n2\n2\n")
    b = csvfile("b.csv", "x\n1\n3\n")
    code, out, _ = run(capsys, "sd", a, a)
    assert code == 0 and json.loads(out)["holds"] and json.loads(out)["worst_margin"] == 0
    code, out, _ = run(capsys, "sd", b, a, "--relation", "concave")
    assert json.loads(out)["holds"]
    code, out, _ = run(capsys, "sd", a, b, "--relation", "first")
    obj = json.loads(out)
    assert not obj["holds"] and obj["witness"] == 0.5
    code, err = usage(capsys, "sd", a, b, "--relation", "dw")
    assert code == 2 and "--betas" in err
    code, out, _ = run(capsys, "sd", b, a, "--relation", "dw", "--betas", "2,3")
    assert json.loads(out)["holds"]


# ---------------------------------------------------------------- lln

def test_lln_small(capsys):
    code, out, _ = run(capsys, "lln", "--n-grid", "20,200", "--reps", "3", "--seed", "1")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["n"] for r in rows] == ["20", "200"]
    again = run(capsys, "lln", "--n-grid", "20,200", "--reps", "3", "--seed", "1")[1]
    assert again == out


def test_lln_point_and_single_row(capsys):
    code, out, _ = run(capsys, "lln", "--generator", "point", "--n-grid", "5,50", "--reps", "2")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and all(float(r["max_hausdorff"]) == 0 for r in rows)
    code, out, _ = run(capsys, "lln", "--n-grid", "30", "--reps", "2")
    assert len(list(csv.DictReader(io.StringIO(out)))) == 1


def test_lln_usage(capsys):
    assert usage(capsys, "lln", "--n-grid", "100,100")[0] == 2
    assert usage(capsys, "lln", "--n-grid", "100,10")[0] == 2
    assert usage(capsys, "lln", "--n-grid", "a")[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ginimre", "dominate", "eu2015.csv",
                          "eu2000.csv", "--distortion", "dw:0.5"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["holds"]
