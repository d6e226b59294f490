"""Scenario YAML / JSON loader and shipped presets."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import yaml

from irsmec.channel import Geometry
from irsmec.config.scenario import (
    RadioConfig,
    ScenarioConfig,
    SolverConfig,
    SweepConfig,
    default_geometry,
)
from irsmec.config.schema import validate_scenario_spec
from irsmec.errors import DomainError, ScenarioSchemaError
from irsmec.scheduling import TaskSpec

PRESET_DIR = Path(__file__).resolve().parent.parent / "presets"
_SUFFIXES = (".yaml", ".yml", ".json")


def _load_yaml(path: Path) -> dict[str, Any]:
    """读取并解析 YAML 场景文件为字典结构。"""
    try:
        with path.open("r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle)
    except yaml.YAMLError as exc:
        raise ScenarioSchemaError(f"Failed to parse YAML: {path}", [str(exc)]) from exc
    if data is None:
        raise ScenarioSchemaError("Empty scenario file", [str(path)])
    if not isinstance(data, dict):
        raise ScenarioSchemaError("Top-level YAML must be a mapping", [str(path)])
    return data


def scenario_from_spec(normalized: dict[str, Any]) -> ScenarioConfig:
    """由规范化后的 spec 构造 ScenarioConfig，并做链路预算检查。"""
    # 关键步骤：构造领域对象，领域错误统一转为配置错误
    geometry_spec = normalized["geometry"]
    geometry_kwargs: dict[str, Any] = {}
    for key, target in (("ap", "ap_position"), ("irs", "irs_position"), ("users", "user_positions")):
        if key in geometry_spec:
            geometry_kwargs[target] = geometry_spec[key]
    for key, value in geometry_spec.get("pathloss_exponents", {}).items():
        geometry_kwargs[f"pathloss_exponent_{key}"] = value
    if "ref_gain_db" in geometry_spec:
        geometry_kwargs["ref_gain_db"] = geometry_spec["ref_gain_db"]

    try:
        base = default_geometry()
        geometry = Geometry(
            ap_position=geometry_kwargs.pop("ap_position", base.ap_position),
            irs_position=geometry_kwargs.pop("irs_position", base.irs_position),
            user_positions=geometry_kwargs.pop("user_positions", base.user_positions),
            **geometry_kwargs,
        )
        task = TaskSpec(**normalized["task"])
        sweep = SweepConfig(**normalized["sweep"]) if normalized["sweep"] else None
        config = ScenarioConfig(
            name=normalized["name"],
            description=normalized["description"],
            geometry=geometry,
            radio=RadioConfig(**normalized["radio"]),
            task=task,
            solver=SolverConfig(**normalized["solver"]),
            sweep=sweep,
            benchmarks=normalized["benchmarks"],
            trials=normalized["trials"],
            seed=normalized["seed"],
            workers=normalized["workers"],
            paired_sweep=normalized["paired_sweep"],
            fixed_sum_bits=normalized["fixed_sum_bits"],
            **normalized["irs"],
        )
    except DomainError as exc:
        raise ScenarioSchemaError(f"Scenario invalid: {normalized['name']}", [str(exc)]) from exc
    config.check_link_budget()
    return config


def load_scenario_file(path: str | Path) -> ScenarioConfig:
    """从 YAML 或 JSON 文件加载并校验场景配置。"""
    path_obj = Path(path)
    if not path_obj.is_file():
        raise ScenarioSchemaError("Scenario file not found", [str(path_obj)])
    if path_obj.suffix.lower() == ".json":
        return load_scenario_from_json(path_obj.read_text(encoding="utf-8"), str(path_obj))
    spec = _load_yaml(path_obj)
    return scenario_from_spec(validate_scenario_spec(spec, str(path_obj)))


def load_scenario_from_json(text: str, source: str = "<json>") -> ScenarioConfig:
    """从 JSON 字符串加载并校验场景配置。"""
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioSchemaError(f"Invalid JSON: {source}", [str(exc)]) from exc
    return scenario_from_spec(validate_scenario_spec(spec, source))


def list_presets() -> list[str]:
    return sorted(p.stem for p in PRESET_DIR.glob("*.yaml"))


def preset_path(name: str) -> Path:
    path = PRESET_DIR / f"{name}.yaml"
    if not path.is_file():
        raise ScenarioSchemaError(
            f"Unknown preset: {name}", [f"available: {', '.join(list_presets())}"]
        )
    return path


def load_preset(name: str) -> ScenarioConfig:
    return load_scenario_file(preset_path(name))


def resolve_scenario(reference: str | Path) -> ScenarioConfig:
    """参数既可以是文件路径，也可以是预置场景名。"""
    path = Path(reference)
    if path.suffix.lower() in _SUFFIXES or path.exists():
        return load_scenario_file(path)
    return load_preset(str(reference))
