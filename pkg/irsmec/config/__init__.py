"""Scenario configuration: dataclasses, schema validation, loaders, presets."""

from irsmec.config.loader import (
    PRESET_DIR,
    list_presets,
    load_preset,
    load_scenario_file,
    load_scenario_from_json,
    preset_path,
    resolve_scenario,
    scenario_from_spec,
)
from irsmec.config.scenario import (
    BENCHMARKS,
    SWEEP_VARIABLES,
    RadioConfig,
    ScenarioConfig,
    SolverConfig,
    SweepConfig,
    default_geometry,
    default_task,
)
from irsmec.config.schema import validate_scenario_spec

__all__ = [
    "BENCHMARKS",
    "PRESET_DIR",
    "SWEEP_VARIABLES",
    "RadioConfig",
    "ScenarioConfig",
    "SolverConfig",
    "SweepConfig",
    "default_geometry",
    "default_task",
    "list_presets",
    "load_preset",
    "load_scenario_file",
    "load_scenario_from_json",
    "preset_path",
    "resolve_scenario",
    "scenario_from_spec",
    "validate_scenario_spec",
]
