import json

import pytest
import yaml

from irsmec import cli
from irsmec.sim import CertificationReport, SuiteResult

SMALL = {
    "name": "small-cli",
    "irs": {"n_subsurfaces": 2, "elements_per_subsurface": 4, "phase_levels": 2},
    "task": {"data_bits": [1e6, 1e6], "cycles_per_bit": [300, 300], "cloud_freq_hz": 5e9},
    "trials": 2,
    "sweep": {"variable": "L0", "values": [0.5e6, 1e6]},
}


@pytest.fixture
def scenario(tmp_path):
    path = tmp_path / "small.yaml"
    path.write_text(yaml.safe_dump(SMALL), encoding="utf-8")
    return path


def test_run_writes_csv(scenario, tmp_path, capsys):
    out = tmp_path / "results" / "small.csv"
    assert cli.main(["-q", "run", "--config", str(scenario), "--out", str(out)]) == cli.EXIT_OK
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "sweep_value,scheme,mean_delay_s,stderr_s,mean_tno_fraction,trials"
    assert len(lines) == 1 + 2 * 3
    assert "Wrote 6 row(s)" in capsys.readouterr().out


def test_run_json_from_suffix(scenario, tmp_path):
    out = tmp_path / "small.json"
    assert cli.main(["-q", "run", "--config", str(scenario), "--out", str(out), "--trials", "1"]) == 0
    rows = json.loads(out.read_text(encoding="utf-8"))
    assert {row["trials"] for row in rows} == {1}


def test_trials_from_environment(scenario, tmp_path, monkeypatch):
    monkeypatch.setenv("IRSMEC_TRIALS", "3")
    out = tmp_path / "env.json"
    assert cli.main(["-q", "run", "--config", str(scenario), "--out", str(out)]) == 0
    assert {row["trials"] for row in json.loads(out.read_text(encoding="utf-8"))} == {3}


def test_invalid_config_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.yaml"
    path.write_text(yaml.safe_dump({"benchmarks": ["nope"]}), encoding="utf-8")
    assert cli.main(["run", "--config", str(path), "--out", str(tmp_path / "x.csv")]) == cli.EXIT_CONFIG
    assert "benchmarks[0]: unknown scheme" in capsys.readouterr().err


def test_invalid_trials_flag(scenario, tmp_path):
    code = cli.main(["run", "--config", str(scenario), "--out", str(tmp_path / "x.csv"), "--trials", "0"])
    assert code == cli.EXIT_CONFIG


def test_unwritable_output_exit_code(scenario, tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("", encoding="utf-8")
    code = cli.main(["-q", "run", "--config", str(scenario), "--out", str(blocker / "out.csv")])
    assert code == cli.EXIT_IO


def test_certify_passes(scenario, capsys):
    assert cli.main(["-q", "certify", "--config", str(scenario), "--instances", "8"]) == cli.EXIT_OK
    out = capsys.readouterr().out
    for name in ("infinite", "finite", "full_power", "tiny_p1"):
        assert name in out


def test_certify_failure_exit_code(scenario, monkeypatch):
    failing = CertificationReport("x", 1, [SuiteResult("infinite", samples=1, failures=1)])
    monkeypatch.setattr(cli, "certify", lambda *args, **kwargs: failing)
    assert cli.main(["-q", "certify", "--config", str(scenario), "--instances", "1"]) == cli.EXIT_CERTIFICATION


def test_certify_rejects_coarse_grid(scenario):
    code = cli.main(["-q", "certify", "--config", str(scenario), "--grid-resolution", "10"])
    assert code == cli.EXIT_CONFIG


def test_presets_list(capsys):
    assert cli.main(["presets", "--list"]) == 0
    assert "symmetric" in capsys.readouterr().out


def test_presets_show(capsys):
    assert cli.main(["presets", "--show", "asymmetric"]) == 0
    assert "L1_of_fixed_sum" in capsys.readouterr().out


def test_unknown_preset(capsys):
    assert cli.main(["presets", "--show", "missing"]) == cli.EXIT_CONFIG


@pytest.mark.parametrize("name", ["IRSMEC_SEED", "IRSMEC_WORKERS", "IRSMEC_TRIALS"])
def test_non_integer_env_exit_code(monkeypatch, capsys, name):
    monkeypatch.setenv(name, "abc")
    assert cli.main(["-q", "certify", "--config", "symmetric", "--instances", "1"]) == cli.EXIT_CONFIG
    assert f"{name}: expected an integer" in capsys.readouterr().err


def test_certify_grid_defaults_to_1e5_points():
    args = cli.parse_args(["certify", "--config", "symmetric"])
    assert args.grid_resolution == 10**5
