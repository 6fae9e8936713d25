import json
import math
import xml.etree.ElementTree as ET

import pytest

from gravent import EmptyDataError, emit_csv, emit_json, emit_svg
from gravent.cli import main, preset_config

Z1_016 = 1.2424428900898052


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_zeros_command(capsys):
    code, out, _ = run_cli(capsys, "zeros", "--xi2", "0.16")
    assert code == 0
    values = [float(line) for line in out.split()]
    assert len(values) == 1
    assert abs(values[0] - 1.2425) < 1e-4
    code, out, _ = run_cli(capsys, "zeros", "--xi2", "0.265")
    values = [float(line) for line in out.split()]
    assert abs(values[0] - 0.5697) < 1e-4
    assert abs(values[1] - 0.9303) < 1e-4
    code, out, _ = run_cli(capsys, "zeros", "--xi2", "0.3")
    assert code == 0
    assert "no zeros" in out


def test_horizons_command(capsys):
    code, out, _ = run_cli(capsys, "horizons", "--xi2", "0.16")
    assert code == 0
    values = [float(line) for line in out.split()]
    assert values == pytest.approx([0.2, 0.8], abs=1e-12)
    code, out, _ = run_cli(capsys, "horizons", "--xi2", "0.5")
    assert code == 0
    assert "naked singularity" in out


def test_domain_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "zeros", "--xi2", "-1")
    assert code == 1
    assert "DomainError" in err


def test_usage_error_exit_code(capsys):
    assert main(["no-such-command"]) == 2
    capsys.readouterr()
    assert main(["figure", "9"]) == 2
    capsys.readouterr()


def test_figure_csv_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["figure", "4", "--samples", "40", "-o", str(a)]) == 0
    assert main(["figure", "4", "--samples", "40", "-o", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_figure_csv_schema(tmp_path, capsys):
    path = tmp_path / "fig4.csv"
    assert main(["figure", "4", "--samples", "25", "-o", str(path)]) == 0
    capsys.readouterr()
    lines = path.read_text().splitlines()
    meta_lines = [ln for ln in lines if ln.startswith("#")]
    assert any("variable = 'z'" in ln for ln in meta_lines)
    assert any("xi2 = 0.16" in ln for ln in meta_lines)
    assert any("clamped" in ln for ln in meta_lines)
    header_idx = next(i for i, ln in enumerate(lines) if not ln.startswith("#"))
    assert lines[header_idx] == "z,C,S,concurrence,E,flags"
    data = [ln.split(",") for ln in lines[header_idx + 1:]]
    assert len(data) == 25
    assert float(data[0][0]) == pytest.approx(0.801, abs=1e-12)
    # every E value parses as float (possibly nan)
    for rec in data:
        float(rec[4])


def test_sweep_config_round_trip(tmp_path, capsys):
    cfg = preset_config(4)
    cfg["samples"] = 30
    cfg_path = tmp_path / "fig4.json"
    cfg_path.write_text(json.dumps(cfg))
    by_config = tmp_path / "by_config.csv"
    by_figure = tmp_path / "by_figure.csv"
    assert main(["sweep", "--config", str(cfg_path), "-o", str(by_config)]) == 0
    assert main(["figure", "4", "--samples", "30", "-o", str(by_figure)]) == 0
    capsys.readouterr()
    assert by_config.read_bytes() == by_figure.read_bytes()


def test_sweep_flags_override_config(tmp_path, capsys):
    cfg = preset_config(4)
    cfg["samples"] = 30
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    out_path = tmp_path / "out.csv"
    assert main(["sweep", "--config", str(cfg_path), "--samples", "12",
                 "-o", str(out_path)]) == 0
    capsys.readouterr()
    rows = [ln for ln in out_path.read_text().splitlines()
            if ln and not ln.startswith("#")][1:]
    assert len(rows) == 12


def test_unknown_config_key_rejected(tmp_path, capsys):
    cfg_path = tmp_path / "bad.json"
    cfg_path.write_text(json.dumps({"variable": "z", "lo": 1.0, "hi": 2.0,
                                    "charge": 0.1}))
    code, _, err = run_cli(capsys, "sweep", "--config", str(cfg_path))
    assert code == 2
    assert "charge" in err


def test_sweep_requires_variable(capsys):
    code, _, err = run_cli(capsys, "sweep", "--lo", "0", "--hi", "1")
    assert code == 1
    assert "variable" in err


def test_json_format(tmp_path, capsys):
    path = tmp_path / "fig1.json"
    assert main(["figure", "1", "--samples", "20", "--format", "json",
                 "-o", str(path)]) == 0
    capsys.readouterr()
    doc = json.loads(path.read_text())
    assert doc["meta"]["variable"] == "q"
    assert doc["meta"]["xi2"] == 0.265
    assert len(doc["rows"]) == 20
    assert doc["rows"][0]["q"] == 0.0
    assert doc["rows"][0]["E"] == pytest.approx(1.0, abs=1e-6)
    # non-convergent tail rows render as null, not NaN
    tail = doc["rows"][-1]
    assert tail["E"] is None
    assert "no-convergence" in tail["flags"]


def test_svg_output(tmp_path, capsys):
    path = tmp_path / "fig4.svg"
    assert main(["figure", "4", "--samples", "60", "--format", "svg",
                 "-o", str(path)]) == 0
    capsys.readouterr()
    root = ET.fromstring(path.read_text())
    assert root.tag.endswith("svg")
    ns = {"s": "http://www.w3.org/2000/svg"}
    polylines = root.findall(".//s:polyline", ns)
    assert polylines
    for poly in polylines:
        assert len(poly.attrib["points"].split()) >= 2


def test_figure4_curve_touches_unity_near_rotation_free_circle():
    from gravent import figure_preset, run_sweep

    rows = run_sweep(figure_preset(4))
    near_peak = [r.E for r in rows if abs(r.x - 1.2424) < 0.02 and not r.flags]
    assert near_peak
    assert max(near_peak) > 0.995


def test_emit_svg_gap_splitting():
    rows = [(0.0, 1.0), (1.0, 0.8), (2.0, math.nan), (3.0, 0.5), (4.0, 0.6)]
    svg = emit_svg({"E": rows}, axes=("z", "E"))
    assert svg.count("<polyline") == 2
    two_points = emit_svg({"E": [(0.0, 1.0), (1.0, 0.5)]}, axes=("x", "y"))
    assert two_points.count("<polyline") == 1


def test_emit_svg_empty_data():
    with pytest.raises(EmptyDataError):
        emit_svg({"E": [(0.0, 1.0)]}, axes=("x", "y"))
    with pytest.raises(EmptyDataError):
        emit_svg({"E": [(0.0, math.nan), (1.0, math.nan)]}, axes=("x", "y"))


def test_emit_csv_and_json_shapes():
    meta = {"alpha": 1, "beta": "two"}
    csv_text = emit_csv(["x", "y", "flags"], [(1.0, 2.0, ("a", "b"))], meta)
    assert "# alpha = 1" in csv_text
    assert "1.0,2.0,a;b" in csv_text
    doc = json.loads(emit_json(["x", "y"], [(1.0, math.nan)], meta))
    assert doc["rows"][0]["y"] is None


def test_minima_command(tmp_path, capsys):
    out_path = tmp_path / "minima.csv"
    code = main(["minima", "--variable", "z", "--lo", "1.3", "--hi", "3.5",
                 "--samples", "60", "--xi2", "0.16", "--q", "0.6",
                 "--beta", "1.0", "--tau-ratio", "5.0", "-o", str(out_path)])
    capsys.readouterr()
    assert code == 0
    rows = [ln for ln in out_path.read_text().splitlines()
            if ln and not ln.startswith("#")][1:]
    assert len(rows) == 1
    z_min = float(rows[0].split(",")[0])
    assert abs(z_min - 2.2864) < 0.05


def test_minima_rejects_non_z_sweep(capsys):
    code, _, err = run_cli(capsys, "minima", "--figure", "1")
    assert code == 1
    assert "z-sweep" in err


def test_radial_check_command(capsys):
    code, out, _ = run_cli(capsys, "radial-check")
    assert code == 0
    for tag in ("chi1", "chi2", "chi3", "chi4"):
        assert f"{tag}: PASS" in out


def test_frame_compare_command(tmp_path, capsys):
    path = tmp_path / "frames.csv"
    code = main(["frame-compare", "--r-lo", "1.0", "--r-hi", "3.0",
                 "--samples", "5", "--q", "1.0", "--p", "0.0",
                 "-o", str(path)])
    capsys.readouterr()
    assert code == 0
    lines = [ln for ln in path.read_text().splitlines() if not ln.startswith("#")]
    assert lines[0] == "r,static_rate,kruskal_rate,flags"
    first = lines[1].split(",")
    assert first[1] == "nan"
    assert "static-divergent" in first[3]
    # the r=1.5 grid point sits exactly on the static zero
    mid = lines[2].split(",")
    assert float(mid[0]) == 1.5
    assert float(mid[1]) == 0.0


def test_env_var_overrides_quadrature_cap(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("GRAVENT_QUAD_NODES", "256")
    path = tmp_path / "fig1.json"
    assert main(["figure", "1", "--samples", "6", "--format", "json",
                 "-o", str(path)]) == 0
    capsys.readouterr()
    doc = json.loads(path.read_text())
    assert doc["meta"]["quad_max_nodes"] == 256


def test_validate_command(capsys):
    code, out, _ = run_cli(capsys, "validate", "--draws", "5")
    assert code == 0
    assert "ALL CHECKS PASSED" in out
    assert out.count("PASS") >= 8
