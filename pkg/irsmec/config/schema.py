"""Scenario file schema validation and normalization."""

from __future__ import annotations

import math
from typing import Any

from irsmec.config.scenario import BENCHMARKS, SWEEP_VARIABLES
from irsmec.errors import ScenarioSchemaError

TOP_LEVEL_FIELDS = {
    "name",
    "description",
    "geometry",
    "irs",
    "radio",
    "task",
    "solver",
    "trials",
    "seed",
    "workers",
    "paired_sweep",
    "fixed_sum_bits",
    "sweep",
    "benchmarks",
}


def _number(value: Any, path: str, errors: list[str], *, minimum=None, strict=False, allow_inf=False):
    """把数字或数字字符串（如 "1e6"、"inf"）转为 float，失败时记录错误。"""
    if isinstance(value, bool):
        errors.append(f"{path}: expected a number, got {value!r}")
        return None
    try:
        number = float(value)
    except (TypeError, ValueError):
        errors.append(f"{path}: expected a number, got {value!r}")
        return None
    if math.isnan(number) or (math.isinf(number) and not allow_inf):
        errors.append(f"{path}: expected a finite number, got {value!r}")
        return None
    if minimum is not None and (number < minimum or (strict and number == minimum)):
        errors.append(f"{path}: must be {'>' if strict else '>='} {minimum:g}, got {number:g}")
        return None
    return number


def _integer(value: Any, path: str, errors: list[str], *, minimum: int | None = None):
    number = _number(value, path, errors)
    if number is None:
        return None
    if not float(number).is_integer():
        errors.append(f"{path}: expected an integer, got {value!r}")
        return None
    number = int(number)
    if minimum is not None and number < minimum:
        errors.append(f"{path}: must be >= {minimum}, got {number}")
        return None
    return number


def _pair(value: Any, path: str, errors: list[str], **kwargs):
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        errors.append(f"{path}: expected two values")
        return None
    items = [_number(v, f"{path}[{i}]", errors, **kwargs) for i, v in enumerate(value)]
    if any(item is None for item in items):
        return None
    return tuple(items)


def _section(spec: dict[str, Any], key: str, errors: list[str]) -> dict[str, Any]:
    value = spec.get(key, {})
    if value is None:
        return {}
    if not isinstance(value, dict):
        errors.append(f"{key}: expected a mapping")
        return {}
    return value


def _unknown(section: dict[str, Any], allowed: set[str], prefix: str, errors: list[str]) -> None:
    for key in sorted(set(section) - allowed):
        errors.append(f"{prefix}{key}: unknown field")


def _validate_geometry(section: dict[str, Any], errors: list[str]) -> dict[str, Any]:
    _unknown(section, {"ap", "irs", "users", "pathloss_exponents", "ref_gain_db"}, "geometry.", errors)
    out: dict[str, Any] = {}
    for key in ("ap", "irs"):
        if key in section:
            out[key] = _pair(section[key], f"geometry.{key}", errors)
    if "users" in section:
        users = section["users"]
        if not isinstance(users, (list, tuple)) or len(users) != 2:
            errors.append("geometry.users: expected two positions")
        else:
            out["users"] = tuple(_pair(u, f"geometry.users[{i}]", errors) for i, u in enumerate(users))
    exponents = section.get("pathloss_exponents", {}) or {}
    if not isinstance(exponents, dict):
        errors.append("geometry.pathloss_exponents: expected a mapping")
        exponents = {}
    _unknown(exponents, {"user_ap", "user_irs", "irs_ap"}, "geometry.pathloss_exponents.", errors)
    out["pathloss_exponents"] = {
        key: _number(value, f"geometry.pathloss_exponents.{key}", errors, minimum=0.0, strict=True)
        for key, value in exponents.items()
    }
    if "ref_gain_db" in section:
        out["ref_gain_db"] = _number(section["ref_gain_db"], "geometry.ref_gain_db", errors)
    return out


def _validate_sweep(value: Any, fixed_sum: float | None, errors: list[str]) -> dict[str, Any] | None:
    if value is None:
        return None
    if not isinstance(value, dict):
        errors.append("sweep: expected a mapping with 'variable' and 'values'")
        return None
    _unknown(value, {"variable", "values"}, "sweep.", errors)
    variable = value.get("variable")
    if variable not in SWEEP_VARIABLES:
        errors.append(f"sweep.variable: expected one of {', '.join(SWEEP_VARIABLES)}, got {variable!r}")
    raw = value.get("values")
    if not isinstance(raw, (list, tuple)) or not raw:
        errors.append("sweep.values: expected a non-empty list")
        return None
    if variable in ("M", "N"):
        values = [_integer(v, f"sweep.values[{i}]", errors, minimum=1) for i, v in enumerate(raw)]
    else:
        values = [_number(v, f"sweep.values[{i}]", errors, minimum=0.0) for i, v in enumerate(raw)]
    if any(v is None for v in values):
        return None
    if any(b <= a for a, b in zip(values, values[1:])):
        errors.append("sweep.values: must be strictly increasing")
    if variable == "L1_of_fixed_sum" and fixed_sum is not None and max(values) > fixed_sum:
        errors.append(f"sweep.values: L1 values must not exceed fixed_sum_bits ({fixed_sum:g})")
    return {"variable": variable, "values": tuple(values)}


def validate_scenario_spec(spec: dict[str, Any], source: str) -> dict[str, Any]:
    """校验并规范化场景 spec，返回标准化结构；所有问题以点号字段路径汇总报告。"""
    # 关键步骤：逐字段校验并收集错误（场景结构）
    if not isinstance(spec, dict):
        raise ScenarioSchemaError("Scenario spec must be a mapping", [source])
    errors: list[str] = []
    _unknown(spec, TOP_LEVEL_FIELDS, "", errors)
    normalized: dict[str, Any] = {
        "name": str(spec.get("name") or source),
        "description": str(spec.get("description") or ""),
    }

    normalized["geometry"] = _validate_geometry(_section(spec, "geometry", errors), errors)

    irs = _section(spec, "irs", errors)
    _unknown(irs, {"n_subsurfaces", "elements_per_subsurface", "phase_levels"}, "irs.", errors)
    normalized["irs"] = {
        "n_subsurfaces": _integer(irs.get("n_subsurfaces", 5), "irs.n_subsurfaces", errors, minimum=1),
        "elements_per_subsurface": _integer(
            irs.get("elements_per_subsurface", 20), "irs.elements_per_subsurface", errors, minimum=1
        ),
        "phase_levels": _integer(irs.get("phase_levels", 4), "irs.phase_levels", errors, minimum=0),
    }

    radio = _section(spec, "radio", errors)
    _unknown(radio, {"bandwidth_hz", "noise_density_dbm_hz", "max_power_dbm"}, "radio.", errors)
    normalized["radio"] = {
        "bandwidth_hz": _number(
            radio.get("bandwidth_hz", 250e3), "radio.bandwidth_hz", errors, minimum=0.0, strict=True
        ),
        "noise_density_dbm_hz": _number(
            radio.get("noise_density_dbm_hz", -140.0), "radio.noise_density_dbm_hz", errors
        ),
        "max_power_dbm": _pair(radio.get("max_power_dbm", (5.0, 5.0)), "radio.max_power_dbm", errors),
    }

    task = _section(spec, "task", errors)
    _unknown(task, {"data_bits", "cycles_per_bit", "cloud_freq_hz"}, "task.", errors)
    normalized["task"] = {
        "data_bits": _pair(task.get("data_bits", (1e6, 1e6)), "task.data_bits", errors, minimum=0.0),
        "cycles_per_bit": _pair(
            task.get("cycles_per_bit", (300.0, 300.0)), "task.cycles_per_bit", errors, minimum=0.0
        ),
        "cloud_freq_hz": _number(
            task.get("cloud_freq_hz", 5e9), "task.cloud_freq_hz", errors, minimum=0.0, strict=True, allow_inf=True
        ),
    }

    solver = _section(spec, "solver", errors)
    _unknown(
        solver,
        {"mode", "eta_grid_points", "exhaustive_budget", "random_draws", "scheduling_orders"},
        "solver.",
        errors,
    )
    mode = solver.get("mode", "exhaustive")
    if mode not in ("exhaustive", "eta", "random"):
        errors.append(f"solver.mode: expected one of exhaustive|eta|random, got {mode!r}")
    orders = solver.get("scheduling_orders", [[1, 2], [2, 1]])
    if not isinstance(orders, (list, tuple)) or not orders or any(
        not isinstance(o, (list, tuple)) or tuple(o) not in ((1, 2), (2, 1)) for o in orders
    ):
        errors.append("solver.scheduling_orders: expected a non-empty list drawn from [1, 2] and [2, 1]")
        orders = [[1, 2], [2, 1]]
    normalized["solver"] = {
        "mode": mode,
        "eta_grid_points": _integer(solver.get("eta_grid_points", 101), "solver.eta_grid_points", errors, minimum=2),
        "exhaustive_budget": _integer(
            solver.get("exhaustive_budget", 10**6), "solver.exhaustive_budget", errors, minimum=1
        ),
        "random_draws": _integer(solver.get("random_draws", 5), "solver.random_draws", errors, minimum=1),
        "scheduling_orders": tuple(sorted({tuple(o) for o in orders})),
    }

    normalized["trials"] = _integer(spec.get("trials", 100), "trials", errors, minimum=1)
    normalized["seed"] = _integer(spec.get("seed", 2024), "seed", errors, minimum=0)
    normalized["workers"] = _integer(spec.get("workers", 1), "workers", errors, minimum=1)
    paired = spec.get("paired_sweep", True)
    if not isinstance(paired, bool):
        errors.append(f"paired_sweep: expected true or false, got {paired!r}")
    normalized["paired_sweep"] = bool(paired)
    fixed_sum = _number(spec.get("fixed_sum_bits", 6.7e6), "fixed_sum_bits", errors, minimum=0.0, strict=True)
    normalized["fixed_sum_bits"] = fixed_sum
    normalized["sweep"] = _validate_sweep(spec.get("sweep"), fixed_sum, errors)

    benchmarks = spec.get("benchmarks", ["timeshare", "tdma", "noma"])
    if not isinstance(benchmarks, (list, tuple)) or not benchmarks:
        errors.append("benchmarks: expected a non-empty list")
        benchmarks = []
    for index, name in enumerate(benchmarks):
        if name not in BENCHMARKS:
            errors.append(f"benchmarks[{index}]: unknown scheme {name!r}")
    normalized["benchmarks"] = tuple(dict.fromkeys(benchmarks))

    if errors:
        raise ScenarioSchemaError(f"Scenario schema invalid: {source}", errors)
    return normalized
