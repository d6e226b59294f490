"""Result rows and their CSV / JSON emission."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable

from irsmec.errors import DomainError, ResultsIOError

CSV_COLUMNS = ("sweep_value", "scheme", "mean_delay_s", "stderr_s", "mean_tno_fraction", "trials")
FORMATS = ("csv", "json")


@dataclass(frozen=True)
class ResultRow:
    sweep_value: float | None
    scheme: str
    mean_delay_s: float
    stderr_s: float
    mean_tno_fraction: float
    trials: int

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise DomainError("Result rows aggregate at least one trial", {"trials": self.trials})
        if not 0.0 <= self.mean_tno_fraction <= 1.0:
            raise DomainError("NOMA time fraction must lie in [0, 1]", {"fraction": self.mean_tno_fraction})


def _cell(value) -> str:
    # repr gives the shortest round-trip form with '.' as decimal point
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value) if math.isfinite(value) else str(value)
    return str(value)


def _write_csv(rows: list[ResultRow], path: Path) -> None:
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow([_cell(getattr(row, column)) for column in CSV_COLUMNS])


def _write_json(rows: list[ResultRow], path: Path) -> None:
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        json.dump([asdict(row) for row in rows], handle, indent=2)
        handle.write("\n")


def emit_results(rows: Iterable[ResultRow], format: str, path: str | Path) -> None:
    """写出结果：CSV 含表头，JSON 为字段同名的对象数组。"""
    # 关键步骤：创建父目录并按格式写出，I/O 失败附带路径
    if format not in FORMATS:
        raise DomainError("Unknown result format", {"format": format})
    rows = list(rows)
    path_obj = Path(path)
    try:
        path_obj.parent.mkdir(parents=True, exist_ok=True)
        if format == "csv":
            _write_csv(rows, path_obj)
        else:
            _write_json(rows, path_obj)
    except OSError as exc:
        raise ResultsIOError(f"Failed to write results: {exc.strerror or exc}", str(path_obj)) from exc


def load_results_json(path: str | Path) -> list[ResultRow]:
    path_obj = Path(path)
    try:
        data = json.loads(path_obj.read_text(encoding="utf-8"))
    except OSError as exc:
        raise ResultsIOError(f"Failed to read results: {exc.strerror or exc}", str(path_obj)) from exc
    return [ResultRow(**item) for item in data]
