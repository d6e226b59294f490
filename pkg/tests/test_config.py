import json
import math

import pytest
import yaml

from irsmec.config import (
    ScenarioConfig,
    SolverConfig,
    SweepConfig,
    list_presets,
    load_preset,
    load_scenario_file,
    load_scenario_from_json,
    resolve_scenario,
    validate_scenario_spec,
)
from irsmec.config.scenario import RadioConfig
from irsmec.errors import DomainError, IrsMecErrorCode, ScenarioSchemaError
from irsmec.scheduling import SolverMode


def _write(tmp_path, spec, name="scenario.yaml"):
    path = tmp_path / name
    path.write_text(yaml.safe_dump(spec), encoding="utf-8")
    return path


class TestPresets:
    def test_shipped_presets(self):
        assert set(list_presets()) >= {
            "symmetric",
            "asymmetric",
            "symmetric_elements",
            "symmetric_elements_infinite",
            "asymmetric_intensity",
        }

    @pytest.mark.parametrize(
        "name", ["symmetric", "asymmetric", "symmetric_elements", "symmetric_elements_infinite", "asymmetric_intensity"]
    )
    def test_presets_load(self, name):
        config = load_preset(name)
        assert config.name == name
        assert config.sweep is not None
        assert config.trials >= 1

    def test_symmetric_preset_values(self):
        config = load_preset("symmetric")
        assert config.radio.bandwidth_hz == 250e3
        assert math.isinf(config.task.cloud_freq_hz)
        assert config.sweep.variable == "L0"
        assert config.sweep.values == (0.5e6, 1.0e6, 1.5e6, 2.0e6)
        assert "no_irs_variants" in config.benchmarks

    def test_asymmetric_preset_schedules_first_user_first(self):
        config = load_preset("asymmetric")
        assert config.solver.scheduling_orders == ((1, 2),)
        assert config.solver_controls().scheduling_orders == ((0, 1),)

    def test_asymmetric_preset_states_lowered_cloud_frequency(self):
        config = load_preset("asymmetric")
        assert config.task.cloud_freq_hz == 0.5e9
        assert "F = 0.5 GHz" in config.description

    def test_element_sweep_ships_both_cloud_capacities(self):
        finite = load_preset("symmetric_elements")
        infinite = load_preset("symmetric_elements_infinite")
        assert finite.task.cloud_freq_hz == 5e9
        assert math.isinf(infinite.task.cloud_freq_hz)
        assert infinite.sweep.values == finite.sweep.values
        assert infinite.task.data_bits == finite.task.data_bits

    def test_unknown_preset(self):
        with pytest.raises(ScenarioSchemaError) as info:
            load_preset("nope")
        assert any("symmetric" in item for item in info.value.errors)

    def test_resolve_by_name_or_path(self, tmp_path):
        assert resolve_scenario("symmetric").name == "symmetric"
        path = _write(tmp_path, {"name": "mine", "trials": 2})
        assert resolve_scenario(str(path)).name == "mine"


class TestSchema:
    def test_defaults(self):
        normalized = validate_scenario_spec({}, "empty")
        assert normalized["name"] == "empty"
        assert normalized["irs"] == {"n_subsurfaces": 5, "elements_per_subsurface": 20, "phase_levels": 4}
        assert normalized["solver"]["scheduling_orders"] == ((1, 2), (2, 1))
        assert normalized["sweep"] is None

    def test_numeric_strings(self):
        normalized = validate_scenario_spec(
            {"radio": {"bandwidth_hz": "250.0e3"}, "task": {"cloud_freq_hz": "inf"}}, "s"
        )
        assert normalized["radio"]["bandwidth_hz"] == 250e3
        assert math.isinf(normalized["task"]["cloud_freq_hz"])

    def test_errors_use_field_paths(self):
        spec = {
            "radio": {"max_power_dbm": [5]},
            "benchmarks": ["timeshare", "magic"],
            "irs": {"n_subsurfaces": 0, "colour": "red"},
            "solver": {"mode": "greedy"},
            "extra": 1,
        }
        with pytest.raises(ScenarioSchemaError) as info:
            validate_scenario_spec(spec, "bad")
        errors = info.value.errors
        assert "radio.max_power_dbm: expected two values" in errors
        assert "benchmarks[1]: unknown scheme 'magic'" in errors
        assert "irs.colour: unknown field" in errors
        assert "extra: unknown field" in errors
        assert any(e.startswith("irs.n_subsurfaces: must be >= 1") for e in errors)
        assert any(e.startswith("solver.mode:") for e in errors)
        assert info.value.code is IrsMecErrorCode.CONFIG_INVALID

    def test_sweep_checks(self):
        with pytest.raises(ScenarioSchemaError) as info:
            validate_scenario_spec({"sweep": {"variable": "L0", "values": [2e6, 1e6]}}, "s")
        assert "sweep.values: must be strictly increasing" in info.value.errors
        with pytest.raises(ScenarioSchemaError):
            validate_scenario_spec(
                {"fixed_sum_bits": 1e6, "sweep": {"variable": "L1_of_fixed_sum", "values": [2e6]}}, "s"
            )
        with pytest.raises(ScenarioSchemaError):
            validate_scenario_spec({"sweep": {"variable": "P", "values": [1]}}, "s")

    def test_paired_sweep_must_be_bool(self):
        with pytest.raises(ScenarioSchemaError):
            validate_scenario_spec({"paired_sweep": "yes"}, "s")


class TestLoader:
    def test_missing_file(self, tmp_path):
        with pytest.raises(ScenarioSchemaError):
            load_scenario_file(tmp_path / "missing.yaml")

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("radio: [unclosed", encoding="utf-8")
        with pytest.raises(ScenarioSchemaError):
            load_scenario_file(path)

    def test_json(self, tmp_path):
        spec = {"name": "js", "irs": {"n_subsurfaces": 2}, "task": {"cloud_freq_hz": "inf"}}
        config = load_scenario_from_json(json.dumps(spec))
        assert config.n_subsurfaces == 2
        assert config.task.infinite_capacity
        path = tmp_path / "scenario.json"
        path.write_text(json.dumps(spec), encoding="utf-8")
        assert load_scenario_file(path).name == "js"

    def test_domain_errors_become_schema_errors(self, tmp_path):
        path = _write(tmp_path, {"geometry": {"pathloss_exponents": {"user_ap": 9.0}}})
        with pytest.raises(ScenarioSchemaError):
            load_scenario_file(path)

    def test_colocated_positions_rejected(self, tmp_path):
        path = _write(tmp_path, {"geometry": {"ap": [0, 0], "irs": [0, 0]}})
        with pytest.raises(ScenarioSchemaError):
            load_scenario_file(path)

    def test_link_budget(self, tmp_path):
        path = _write(tmp_path, {"radio": {"max_power_dbm": [-200, 5]}})
        with pytest.raises(ScenarioSchemaError) as info:
            load_scenario_file(path)
        assert info.value.errors[0].startswith("radio.max_power_dbm[0]")

    def test_exhaustive_budget_checked_over_sweep(self, tmp_path):
        spec = {
            "irs": {"n_subsurfaces": 2, "phase_levels": 4},
            "solver": {"exhaustive_budget": 100},
            "sweep": {"variable": "N", "values": [2, 3, 4]},
        }
        with pytest.raises(ScenarioSchemaError) as info:
            load_scenario_file(_write(tmp_path, spec))
        assert info.value.errors[0].startswith("solver.exhaustive_budget")
        spec["solver"]["mode"] = "eta"
        assert load_scenario_file(_write(tmp_path, spec)).solver_mode is SolverMode.ETA


class TestScenarioConfig:
    def test_env_overrides(self, monkeypatch):
        monkeypatch.setenv("IRSMEC_SEED", "7")
        monkeypatch.setenv("IRSMEC_WORKERS", "3")
        monkeypatch.setenv("IRSMEC_TRIALS", "11")
        config = ScenarioConfig()
        assert (config.seed, config.workers, config.trials) == (7, 3, 11)

    @pytest.mark.parametrize("name", ["IRSMEC_SEED", "IRSMEC_WORKERS", "IRSMEC_TRIALS"])
    def test_non_integer_env_is_schema_error(self, monkeypatch, name):
        monkeypatch.setenv(name, "abc")
        with pytest.raises(ScenarioSchemaError) as info:
            ScenarioConfig()
        assert info.value.errors == [f"{name}: expected an integer, got 'abc'"]

    def test_invalid_values_collected(self):
        with pytest.raises(ScenarioSchemaError) as info:
            ScenarioConfig(trials=0, workers=0, benchmarks=("bogus",))
        assert len(info.value.errors) == 3

    def test_sweep_value_substitution(self):
        config = ScenarioConfig(sweep=SweepConfig("L1_of_fixed_sum", (1e6, 2e6)), fixed_sum_bits=6.7e6)
        point = config.at_sweep_value(2e6)
        assert point.task.data_bits == (2e6, 6.7e6 - 2e6)
        assert config.task.data_bits == (1e6, 1e6)

    @pytest.mark.parametrize(
        "variable,value,check",
        [
            ("L0", 3e6, lambda c: c.task.data_bits == (3e6, 3e6)),
            ("C1", 1000.0, lambda c: c.task.cycles_per_bit == (1000.0, 300.0)),
            ("M", 40.0, lambda c: c.elements_per_subsurface == 40),
            ("N", 3.0, lambda c: c.n_subsurfaces == 3),
        ],
    )
    def test_each_sweep_variable(self, variable, value, check):
        config = ScenarioConfig(sweep=SweepConfig(variable, (value,)))
        assert check(config.at_sweep_value(value))

    def test_sweep_value_keeps_env_free_settings(self, monkeypatch):
        config = ScenarioConfig(trials=4, sweep=SweepConfig("L0", (1e6,)))
        monkeypatch.setenv("IRSMEC_TRIALS", "99")
        assert config.at_sweep_value(1e6).trials == 4

    def test_no_sweep(self):
        config = ScenarioConfig()
        assert config.sweep_points() == [None]
        assert config.at_sweep_value(None).task == config.task

    def test_sweep_config_validation(self):
        with pytest.raises(DomainError):
            SweepConfig("L0", (2.0, 1.0))

    def test_radio_conversion(self):
        params = RadioConfig(bandwidth_hz=1e6, noise_density_dbm_hz=-140.0, max_power_dbm=(30.0, 0.0)).to_params()
        assert params.max_power_w == pytest.approx((1.0, 1e-3))

    def test_solver_controls(self, rng):
        config = ScenarioConfig(phase_levels=8, solver=SolverConfig(mode="random", random_draws=3))
        controls = config.solver_controls(rng)
        assert controls.levels == 8
        assert controls.random_draws == 3
        assert controls.rng is rng
        assert controls.scheduling_orders == ((0, 1), (1, 0))
