import csv
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from scissorlift.cli import main

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def write(tmp_path, doc, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def base(**overrides):
    doc = {
        "lift": {"stages": 2, "arm_length_m": 1.0, "lift_weight_n": 0, "load_n": 100},
        "placement": {"a": 0, "b": 2, "i": 0, "slope": "negative"},
        "domain": {"theta_lo_deg": 20, "theta_hi_deg": 70},
    }
    doc.update(overrides)
    return doc


def test_analyze_screw_jack(capsys):
    assert main(["analyze", "--config", str(CONFIGS / "screw_jack.json"), "--theta-deg", "45"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dh_dl"] == pytest.approx(2.0, rel=1e-12)
    assert out["force_n"] == pytest.approx(200.0, rel=1e-12)
    assert set(out) == {"theta_deg", "theta_rad", "height_m", "actuator_length_m", "dh_dl", "force_n", "singular"}


def test_analyze_theta_out_of_range(capsys):
    assert main(["analyze", "--config", str(CONFIGS / "screw_jack.json"), "--theta-deg", "0"]) == 1
    assert "theta out of open range" in capsys.readouterr().err


def test_analyze_bad_slope(tmp_path, capsys):
    doc = base(placement={"a": 0, "b": 2, "i": 0, "slope": "diagonal"})
    assert main(["analyze", "--config", write(tmp_path, doc), "--theta-deg", "45"]) == 1
    assert "placement.slope" in capsys.readouterr().err


@pytest.mark.parametrize(
    "doc, field",
    [
        (base(extra=1), "extra"),
        (base(lift={"stages": 0, "arm_length_m": 1.0}), "lift"),
        (base(lift={"stages": 2, "arm_length_m": 1.0, "colour": "red"}), "lift.colour"),
        (base(placement={"a": 2, "b": 0, "i": 0, "slope": "negative"}), "placement"),
        (base(placement={"a": 0, "b": 0, "i": 5, "slope": "negative"}), "placement.i"),
        (base(placement={"a": 0, "b": "x", "i": 0, "slope": "negative"}), "placement.b"),
        (base(domain={"theta_lo_deg": 0, "theta_hi_deg": 70}), "domain"),
        (base(domain={"theta_lo_deg": 10}), "domain.theta_hi_deg"),
    ],
)
def test_config_errors_name_field(tmp_path, capsys, doc, field):
    assert main(["analyze", "--config", write(tmp_path, doc), "--theta-deg", "45"]) == 1
    assert f"error: {field}" in capsys.readouterr().err


def test_analyze_singular_exit_2(tmp_path, capsys):
    doc = base(placement={"a": 0, "b": 0.5, "i": 0, "slope": "negative"})
    assert main(["analyze", "--config", write(tmp_path, doc), "--theta-deg", "60"]) == 2
    captured = capsys.readouterr()
    assert "zero denominator" in captured.err
    assert json.loads(captured.out)["force_n"] is None


def test_sweep_vertical_csv(tmp_path):
    out = tmp_path / "v.csv"
    assert main(["sweep", "--config", str(CONFIGS / "vertical.json"), "--samples", "5", "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "theta_deg,theta_rad,height_m,actuator_length_m,dh_dl,force_n,singular"
    rows = list(csv.DictReader(lines))
    assert len(rows) == 5
    forces = [float(r["force_n"]) for r in rows]
    assert forces == pytest.approx([200.0] * 5, rel=1e-12)


def test_sweep_csv_json_parity(tmp_path):
    cfg = str(CONFIGS / "screw_jack.json")
    main(["sweep", "--config", cfg, "--samples", "9", "--format", "csv", "--out", str(tmp_path / "a.csv")])
    main(["sweep", "--config", cfg, "--samples", "9", "--format", "json", "--out", str(tmp_path / "a.json")])
    rows = list(csv.DictReader((tmp_path / "a.csv").open()))
    objs = json.loads((tmp_path / "a.json").read_text())
    assert len(rows) == len(objs) == 9
    for r, o in zip(rows, objs):
        assert list(r) == list(o)
        for key, value in o.items():
            if isinstance(value, bool):
                assert r[key] == str(value).lower()
            else:
                assert float(r[key]) == value


def test_sweep_singular_row(tmp_path):
    t0 = math.degrees(math.acos(0.9))
    doc = base(placement={"a": 0, "b": 0.9, "i": 0, "slope": "negative"},
               domain={"theta_lo_deg": t0 - 10, "theta_hi_deg": t0 + 10})
    cfg = write(tmp_path, doc)
    out = tmp_path / "s.csv"
    assert main(["sweep", "--config", cfg, "--samples", "5", "--format", "csv", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert rows[2]["singular"] == "true"
    assert rows[2]["dh_dl"] == "" and rows[2]["force_n"] == ""
    assert all(r["singular"] == "false" for i, r in enumerate(rows) if i != 2)


def test_sweep_svg(tmp_path):
    out = tmp_path / "f.svg"
    assert main(["sweep", "--config", str(CONFIGS / "screw_jack.json"), "--samples", "20", "--format", "svg", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("<svg") and 'viewBox="0 0 800 500"' in text
    assert text.count("<polyline") == 1
    assert "href" not in text


def test_sweep_unwritable(tmp_path):
    out = tmp_path / "missing" / "dir" / "x.csv"
    assert main(["sweep", "--config", str(CONFIGS / "screw_jack.json"), "--samples", "3", "--out", str(out)]) == 1


def test_optimize_two_candidates(tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    cfg = str(CONFIGS / "two_candidates.json")
    assert main(["optimize", "--config", cfg, "--out", str(out1)]) == 0
    assert main(["optimize", "--config", cfg, "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    report = json.loads(out1.read_text())
    assert report["best"]["slope"] == "positive" and report["best"]["i"] == 1
    assert report["best"]["objective"] == pytest.approx(200, rel=1e-12)
    assert set(report["ranked"][0]) >= {"a", "b", "i", "slope", "objective", "feasible"}


def test_optimize_infeasible(tmp_path):
    doc = json.loads((CONFIGS / "two_candidates.json").read_text())
    doc["search"]["constraints"] = {"max_force_n": 100}
    out = tmp_path / "r.json"
    assert main(["optimize", "--config", write(tmp_path, doc), "--out", str(out)]) == 3
    report = json.loads(out.read_text())
    assert report["best"] is None
    assert not any(c["feasible"] for c in report["ranked"])


def test_optimize_missing_search(tmp_path, capsys):
    assert main(["optimize", "--config", str(CONFIGS / "screw_jack.json"), "--out", str(tmp_path / "r.json")]) == 1
    assert "search" in capsys.readouterr().err


def test_verify(capsys):
    cfg = str(CONFIGS / "screw_jack.json")
    assert main(["verify", "--config", cfg, "--trials", "200", "--seed", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--config", cfg, "--trials", "200", "--seed", "3"]) == 0
    assert capsys.readouterr().out == first
    assert [line.split()[0] for line in first.splitlines()] == ["length", "derivative", "energy"]


def test_verify_zero_trials():
    assert main(["verify", "--config", str(CONFIGS / "screw_jack.json"), "--trials", "0", "--seed", "1"]) == 1


def test_verify_failure_exit_4(monkeypatch, capsys):
    import scissorlift.verify as v
    from scissorlift import cli

    def strict(*args, **kw):
        # zero tolerance on lengths: round-off alone must trip it
        results = v.run_all(*args, **kw)
        r = results[0]
        results[0] = v.SuiteResult(r.name, r.cases, max(r.max_deviation, 1e-16), 0.0, r.worst)
        return results

    monkeypatch.setattr(cli, "run_all", strict)
    assert main(["verify", "--config", str(CONFIGS / "screw_jack.json"), "--trials", "20", "--seed", "1"]) == 4
    assert "length: worst a=" in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "scissorlift", "analyze", "--config", str(CONFIGS / "vertical.json"), "--theta-deg", "30"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dh_dl"] == pytest.approx(2.0)
