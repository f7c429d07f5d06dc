import json
import math
import xml.etree.ElementTree as ET

import pytest

from ichannel.cli import STRATEGIES, load_job, main
from ichannel.errors import ConfigError
from ichannel.geometry import contains, polytope
from ichannel.presets import PRESETS

SVG_NS = "{http://www.w3.org/2000/svg}"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_config(tmp_path, doc, name="channel.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def test_validate_preset(capsys):
    code, out, _ = run(capsys, "validate", "--config", "fig1-low")
    assert code == 0
    doc = json.loads(out)
    assert doc["valid"] and doc["eta_bar1"] == pytest.approx(0.4375)
    assert doc["eta_bar2"] == pytest.approx(0.4375)
    assert doc["detection_noise"]["heterodyne"]["N1"] == pytest.approx(1.4375)


def test_validate_with_geometry(tmp_path, capsys):
    doc = {"channel": dict(PRESETS["fig3"].to_dict(),
                           geometry={"At": 1e-2, "Ar": 1e-2, "wavelength": 1e-6, "L": 1e3})}
    code, out, _ = run(capsys, "validate", "--config", write_config(tmp_path, doc))
    assert code == 0
    fresnel = json.loads(out)["fresnel"]
    assert fresnel["Df"] == pytest.approx(100.0)
    assert fresnel["regime"] == "NearField"


def test_malformed_json_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "validate", "--config", str(path))
    assert code == 1 and "malformed" in err


def test_missing_key_exits_1(tmp_path, capsys):
    doc = PRESETS["fig3"].to_dict()
    del doc["NB2"]
    code, _, _ = run(capsys, "validate", "--config", write_config(tmp_path, doc))
    assert code == 1


def test_passivity_violation_exits_2(tmp_path, capsys):
    doc = dict(PRESETS["fig2-low"].to_dict(), eta11=0.5, eta22=0.5)
    code, out, _ = run(capsys, "validate", "--config", write_config(tmp_path, doc))
    assert code == 2
    report = json.loads(out)
    assert report == {"valid": False, "error": "PassivityError", "detail": report["detail"]}


def test_strong_homodyne_on_fig3_exits_3(capsys):
    code, _, err = run(capsys, "region", "--config", "fig3", "--strategy", "strong-homodyne")
    assert code == 3 and "Neither" in err
    code, out, _ = run(capsys, "region", "--config", "fig3", "--strategy", "strong-homodyne",
                       "--force")
    assert code == 0
    assert "achievable-only" in json.loads(out)["annotations"]


def test_classify_fig3(capsys):
    code, out, _ = run(capsys, "classify", "--config", "fig3")
    assert code == 0
    regimes = [r["regime"] for r in json.loads(out)["reports"]]
    assert regimes[:2] == ["Neither", "Neither"]


def test_region_vsi_joint_corner(tmp_path, capsys):
    code, out, _ = run(capsys, "region", "--config", "fig1-low", "--strategy", "vsi-joint",
                       "--out", str(tmp_path))
    assert code == 0
    summary = json.loads(out)
    assert summary["corner_rates"]["r1_max"] == pytest.approx(0.0714228, abs=1e-7)
    assert summary["corner_rates"]["r2_max"] == pytest.approx(0.0714228, abs=1e-7)
    assert summary["area"] == pytest.approx(0.071422729495547356 ** 2)
    assert (tmp_path / "vsi-joint.csv").read_text().startswith("R1,R2\n0,0\n")
    assert json.loads((tmp_path / "vsi-joint.json").read_text()) == summary


def test_region_pentagon_csv(tmp_path, capsys):
    code, _, _ = run(capsys, "region", "--config", "fig2-low", "--strategy", "strong-homodyne",
                     "--out", str(tmp_path))
    assert code == 0
    rows = (tmp_path / "strong-homodyne.csv").read_text().splitlines()
    assert rows[0] == "R1,R2"
    pts = [tuple(map(float, r.split(","))) for r in rows[1:]]
    assert len(pts) == 5
    c, s = math.log(3) / 2, math.log(7) / 2
    pent = polytope([(1, 0, c), (0, 1, c), (1, 1, s)])
    assert all(contains(pent, pt, tol=1e-8) for pt in pts)


def test_hk_region_needs_split(tmp_path, capsys):
    doc = PRESETS["fig2-low"].to_dict()
    path = write_config(tmp_path, doc)
    code, _, err = run(capsys, "region", "--config", path, "--strategy", "hk-homodyne")
    assert code == 1 and "split" in err
    code, _, _ = run(capsys, "region", "--config", path, "--strategy", "hk-homodyne",
                     "--split", "0.1,0.1")
    assert code == 0
    code, _, _ = run(capsys, "region", "--config", path, "--strategy", "hk-homodyne",
                     "--split", "0.1,1.5")
    assert code == 1


def test_unknown_strategy_exits_1(capsys):
    code, _, _ = run(capsys, "region", "--config", "fig1-low", "--strategy", "vsi-magic")
    assert code == 1


def test_every_strategy_emits_valid_vertices(capsys):
    for name in STRATEGIES:
        code, out, _ = run(capsys, "region", "--config", "fig3", "--strategy", name,
                           "--split", "0.1,0.1", "--force")
        assert code == 0, name
        summary = json.loads(out)
        assert summary["vertices"][0] == [0, 0]
        assert summary["area"] >= 0


def test_compare_joint_vs_homodyne(capsys):
    code, out, _ = run(capsys, "compare", "--config", "fig1-low",
                       "--strategy", "vsi-joint", "--strategy", "vsi-homodyne")
    assert code == 0
    doc = json.loads(out)
    assert doc["relation"] == "B ⊂ A"
    assert doc["witness_b_not_a"] is None
    assert doc["witness_a_not_b"] == pytest.approx([0.071422729495547356, 0.0])
    assert doc["area_ratio"] == pytest.approx((0.071422729495547356 / 0.062581571477003007) ** 2)
    assert doc["area_ratio"] == pytest.approx(1.302, abs=1e-3)


def test_compare_identical(capsys):
    code, out, _ = run(capsys, "compare", "--config", "fig2-high",
                       "--strategy", "strong-quantum", "--strategy", "strong-quantum")
    assert code == 0
    doc = json.loads(out)
    assert doc["relation"] == "A = B" and doc["area_ratio"] == 1.0


def test_compare_fig2_high_minentropy_vs_heterodyne(capsys):
    code, out, _ = run(capsys, "compare", "--config", "fig2-high",
                       "--strategy", "strong-minentropy-hull", "--strategy", "strong-heterodyne")
    assert code == 0
    doc = json.loads(out)
    assert doc["witness_a_not_b"] == pytest.approx([3.7774121590933877, 0.0], abs=1e-9)
    assert doc["relation"] == "B ⊂ A"


def test_compare_needs_two_strategies(capsys):
    code, _, _ = run(capsys, "compare", "--config", "fig1-low", "--strategy", "vsi-joint")
    assert code == 1


def test_sweep(tmp_path, capsys):
    code, out, _ = run(capsys, "sweep", "--config", "fig3", "--strategy", "hk-heterodyne",
                       "--grid", "3", "--out", str(tmp_path))
    assert code == 0
    doc = json.loads(out)
    assert doc["grid"] == 3 and doc["label"] == "hk-heterodyne-sweep3"
    assert (tmp_path / "hk-heterodyne-sweep3.csv").exists()
    code, _, _ = run(capsys, "sweep", "--config", "fig3", "--strategy", "vsi-joint")
    assert code == 1


def test_config_split_and_grid(tmp_path):
    doc = {"channel": PRESETS["fig3"].to_dict(), "split": {"lambda1": 0.2, "lambda2": 0.4},
           "sweep": {"grid": 5}}
    job = load_job(write_config(tmp_path, doc))
    assert (job.split.lambda1, job.split.lambda2) == (0.2, 0.4)
    assert job.grid == 5
    with pytest.raises(ConfigError):
        load_job(str(tmp_path / "missing.json"))


@pytest.mark.parametrize("preset, count", [
    ("fig1-low", 3), ("fig1-high", 3), ("fig2-low", 4), ("fig2-high", 4), ("fig3", 4),
])
def test_figure_outputs(tmp_path, capsys, preset, count):
    code, out, _ = run(capsys, "figure", "--config", preset, "--out", str(tmp_path))
    assert code == 0
    doc = json.loads(out)
    assert len(doc["series"]) == count
    root = ET.parse(tmp_path / f"{preset}.svg").getroot()
    assert root.tag == SVG_NS + "svg"
    assert len(root.findall(f".//{SVG_NS}polygon")) == count
    csvs = sorted(p.name for p in tmp_path.glob(f"{preset}_*.csv"))
    assert len(csvs) == count


def test_figure1_low_joint_outermost(tmp_path, capsys):
    code, out, _ = run(capsys, "figure", "--config", "fig1-low", "--out", str(tmp_path))
    corners = {s["strategy"]: s["corner_rates"]["r1_max"] for s in json.loads(out)["series"]}
    assert corners["vsi-joint"] > corners["vsi-homodyne"] > corners["vsi-heterodyne"]


def test_figure_is_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a", tmp_path / "b"
    assert run(capsys, "figure", "--config", "fig3", "--out", str(first))[0] == 0
    assert run(capsys, "figure", "--config", "fig3", "--out", str(second))[0] == 0
    names = sorted(p.name for p in first.iterdir())
    assert names == sorted(p.name for p in second.iterdir())
    for name in names:
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_figure_id_from_flag(tmp_path, capsys):
    path = write_config(tmp_path, PRESETS["fig2-high"].to_dict(), "custom.json")
    code, _, _ = run(capsys, "figure", "--config", path, "--out", str(tmp_path))
    assert code == 1
    code, out, _ = run(capsys, "figure", "--config", path, "--figure", "2",
                       "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "fig2-custom.svg").exists()
