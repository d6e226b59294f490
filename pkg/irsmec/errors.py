"""Error types and codes shared across the simulator."""

from __future__ import annotations

from enum import Enum
from typing import Any


class IrsMecErrorCode(str, Enum):
    DOMAIN = "DOMAIN"
    DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    UNOFFLOADABLE = "UNOFFLOADABLE"
    INCONSISTENT_DIVISION = "INCONSISTENT_DIVISION"
    CONFIG_INVALID = "CONFIG_INVALID"
    IO_FAILED = "IO_FAILED"


class IrsMecError(Exception):
    """所有仿真器错误的基类，携带错误码与可选详情。"""

    code: IrsMecErrorCode = IrsMecErrorCode.DOMAIN

    def __init__(
        self,
        message: str,
        details: dict[str, Any] | None = None,
        code: IrsMecErrorCode | None = None,
    ) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}
        if code is not None:
            self.code = code

    def with_details(self, **kwargs: Any) -> "IrsMecError":
        """合并并附加错误详情，返回同类型的新错误对象。"""
        # 关键步骤：合并 details 并生成新对象（错误模型）
        merged = dict(self.details)
        merged.update(kwargs)
        clone = type(self).__new__(type(self))
        IrsMecError.__init__(clone, self.message, merged, self.code)
        for key, value in vars(self).items():
            if key not in ("message", "details", "code"):
                setattr(clone, key, value)
        return clone

    def __str__(self) -> str:
        if not self.details:
            return self.message
        extra = ", ".join(f"{key}={value}" for key, value in self.details.items())
        return f"{self.message} ({extra})"


class DomainError(IrsMecError, ValueError):
    code = IrsMecErrorCode.DOMAIN


class ChannelDimensionError(IrsMecError, ValueError):
    code = IrsMecErrorCode.DIMENSION_MISMATCH


class BudgetExceededError(IrsMecError):
    code = IrsMecErrorCode.BUDGET_EXCEEDED


class UnoffloadableError(IrsMecError, ValueError):
    """某用户 TDMA 速率为零，无法卸载任务。"""

    code = IrsMecErrorCode.UNOFFLOADABLE


class DivisionConsistencyError(IrsMecError, ArithmeticError):
    code = IrsMecErrorCode.INCONSISTENT_DIVISION


class ScenarioSchemaError(IrsMecError, ValueError):
    code = IrsMecErrorCode.CONFIG_INVALID

    def __init__(self, message: str, errors: list[str] | None = None) -> None:
        """初始化场景配置校验错误，并保存逐字段的错误明细。"""
        super().__init__(message, {"errors": list(errors or [])})
        self.errors = list(errors or [])

    def __str__(self) -> str:
        if not self.errors:
            return self.message
        return self.message + "\n" + "\n".join(f"  - {item}" for item in self.errors)


class ResultsIOError(IrsMecError, OSError):
    code = IrsMecErrorCode.IO_FAILED

    def __init__(self, message: str, path: str) -> None:
        super().__init__(message, {"path": path})
        self.path = path
