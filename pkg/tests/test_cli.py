import csv
import json
import subprocess
import sys

import pytest

from oligosim.cli import main
from conftest import CONFIGS, GOLDEN

DEFAULT = str(CONFIGS / "default.cfg")


def small_spec(tmp_path, g1="0.5", g2="0.2", replicates=4):
    text = (CONFIGS / "default.cfg").read_text()
    path = tmp_path / "spec.cfg"
    path.write_text(text + f"\n[sweep]\ngamma_one = {g1}\ngamma_two = {g2}\nreplicates = {replicates}\n")
    return str(path)


def test_run_writes_bundle(tmp_path, capsys):
    assert main(["run", "--config", DEFAULT, "--out", str(tmp_path)]) == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == sorted(
        ["run.csv", "summary.json", "graph1_prices.svg", "graph2_costs.svg", "graph3_production.svg", "graph4_excess.svg"]
    )
    rows = (tmp_path / "run.csv").read_text().splitlines()
    assert len(rows) == 31
    assert (tmp_path / "graph1_prices.svg").read_text().count("<polyline") == 2
    assert capsys.readouterr().out.startswith("global_excess=")


def test_run_matches_golden(tmp_path):
    main(["run", "--config", DEFAULT, "--out", str(tmp_path)])
    assert (tmp_path / "run.csv").read_bytes() == (GOLDEN / "run.csv").read_bytes()
    assert (tmp_path / "summary.json").read_bytes() == (GOLDEN / "summary.json").read_bytes()


def test_horizon_one(tmp_path):
    cfg = tmp_path / "h1.cfg"
    cfg.write_text((CONFIGS / "default.cfg").read_text().replace("horizon = 30", "horizon = 1"))
    assert main(["run", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 0
    assert len((tmp_path / "o" / "run.csv").read_text().splitlines()) == 2


def test_seed_override(tmp_path):
    main(["run", "--config", DEFAULT, "--out", str(tmp_path / "a"), "--seed", "99"])
    summary = json.loads((tmp_path / "a" / "summary.json").read_text())
    assert summary["seed"] == 99 and summary["config"]["simulation"]["seed"] == 99
    assert (tmp_path / "a" / "run.csv").read_bytes() != (GOLDEN / "run.csv").read_bytes()


def test_missing_config(tmp_path, capsys):
    assert main(["run", "--config", str(tmp_path / "nope.cfg"), "--out", str(tmp_path)]) != 0
    assert "error" in capsys.readouterr().err


def test_invalid_config(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("[simulation]\nhorizon = -3\n[firm.1]\nc = 0.5\nd = 0.5\n")
    assert main(["run", "--config", str(cfg), "--out", str(tmp_path)]) == 2
    assert "horizon" in capsys.readouterr().err


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert main(["run", "--config", DEFAULT, "--out", str(blocker / "sub")]) != 0


def test_sweep_single_cell(tmp_path):
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--spec", small_spec(tmp_path), "--out", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["gamma_one", "gamma_two", "runs", "mean", "median", "stddev", "fraction_positive"]
    assert len(rows) == 2
    assert rows[1][:3] == ["0.5", "0.2", "4"]


def test_sweep_zero_gamma(tmp_path):
    out = tmp_path / "sweep.csv"
    main(["sweep", "--spec", small_spec(tmp_path, g1="0.0", g2="0.0"), "--out", str(out)])
    rows = list(csv.DictReader(out.open()))
    assert [r["fraction_positive"] for r in rows] == ["0"]


def test_sweep_deterministic_bytes(tmp_path):
    spec = small_spec(tmp_path, g1="0.3, 0.6", g2="0.1, 0.2")
    main(["sweep", "--spec", spec, "--out", str(tmp_path / "a.csv")])
    main(["sweep", "--spec", spec, "--out", str(tmp_path / "b.csv")])
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_calibrate(tmp_path, capsys):
    spec = small_spec(tmp_path, g1="0.5, 0.7, 0.9", g2="0.4, 0.6, 0.8", replicates=10)
    written = tmp_path / "calibrated.cfg"
    assert main(["calibrate", "--target", "1.5", "--spec", spec, "--write-config", str(written)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["target"] == 1.5 and doc["replicates"] == 10
    assert f"gamma_one = {doc['gamma_one']!r}" in written.read_text()


def test_calibrate_small_grid_is_an_error(tmp_path, capsys):
    assert main(["calibrate", "--target", "1.5", "--spec", small_spec(tmp_path)]) == 2
    assert "3x3" in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "oligosim", "run", "--config", DEFAULT, "--out", str(tmp_path)],
        capture_output=True,
        text=True,
        env={"OLIGOSIM_LOG_LEVEL": "INFO", "PATH": ""},
    )
    assert proc.returncode == 0, proc.stderr
    assert "wrote" in proc.stderr


def test_requires_subcommand():
    with pytest.raises(SystemExit):
        main([])
