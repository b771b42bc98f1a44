import json
import subprocess
import sys

import pytest

from dce.cli import main
from dce.simulate import CSV_HEADER, read_csv


def test_power_alloc_reference(capsys):
    assert main(["power-alloc", "--gamma", "0.03", "--snr-db", "20"]) == 0
    out = capsys.readouterr().out
    assert "x*      = 17.243902" in out
    assert "p1      = 0.492683" in out
    assert "sigma_a_sq = 0.253659" in out


def test_power_alloc_verify_runs_oracle(capsys):
    assert main(["power-alloc", "--gamma", "0.1", "--snr-db", "20", "--verify", "--grid-points", "500"]) == 0
    out = capsys.readouterr().out
    assert "grid oracle" in out


def test_power_alloc_infeasible_gamma_exit_2(capsys):
    assert main(["power-alloc", "--gamma", "3.0", "--snr-db", "20"]) == 2
    assert "infeasible" in capsys.readouterr().err


def test_closed_form_with_attack(capsys):
    assert main(["closed-form", "--gamma", "0.03", "--snr-db", "20", "--p0-bar", "1.0"]) == 0
    out = capsys.readouterr().out
    assert "nmse_lr (clean)" in out
    assert "nmse_ur" in out
    assert "nmse_lr (attack)" in out


def test_simulate_writes_csv(tmp_path, capsys):
    out = tmp_path / "run.csv"
    rc = main(
        [
            "simulate",
            "--scheme", "wr",
            "--attack", "none",
            "--gamma", "0.03",
            "--snr-db", "20",
            "--trials", "50",
            "--seed", "3",
            "--out", str(out),
        ]
    )
    assert rc == 0
    rows = read_csv(out)
    assert len(rows) == 1
    assert rows[0].scheme == "wr" and rows[0].trials == 50


def test_simulate_config_file_with_flag_override(tmp_path):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"t0": 70, "t1": 70, "gamma": 0.1, "trials": 10}))
    out = tmp_path / "run.csv"
    rc = main(
        ["simulate", "--config", str(cfg_path), "--snr-db", "20", "--trials", "20", "--out", str(out)]
    )
    assert rc == 0
    rows = read_csv(out)
    assert rows[0].trials == 20  # flag wins over file
    # allocation used t1 = 70 and gamma = 0.1 from the file:
    # x = (1 + 0.01) * 70 / (0.1 * 70 + 4), p1 = 4 x / 70
    assert rows[0].p1 == pytest.approx(1.01 * 70 / 11 * 4 / 70, rel=1e-6)


def test_simulate_io_error_exit_3(tmp_path, capsys):
    rc = main(
        ["simulate", "--snr-db", "20", "--trials", "2", "--out", str(tmp_path / "missing" / "x.csv")]
    )
    assert rc == 3


def test_experiment_fig2(tmp_path):
    rc = main(["experiment", "fig2", "--out", str(tmp_path)])
    assert rc == 0
    csv_path = tmp_path / "fig2.csv"
    rows = read_csv(csv_path)
    assert len(rows) == 6  # one row per SNR point
    assert all(r.trials == 0 and r.p1 is not None for r in rows)
    assert (tmp_path / "fig2.provenance.txt").exists()


def test_experiment_small_fig4c(tmp_path):
    rc = main(["experiment", "fig4c", "--out", str(tmp_path), "--trials", "10"])
    assert rc == 0
    rows = read_csv(tmp_path / "fig4c.csv")
    assert [r.sweep_value for r in rows] == [pytest.approx(0.1 * k) for k in range(1, 11)]
    assert all(r.attack_mode == "guess" for r in rows)


def test_usage_error_exit_1():
    assert main(["simulate", "--scheme", "bogus"]) == 1
    assert main(["no-such-command"]) == 1


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dce.cli", "power-alloc", "--gamma", "0.03", "--snr-db", "20"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "x*" in proc.stdout
