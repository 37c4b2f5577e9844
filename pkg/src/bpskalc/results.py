"""Outcome type shared by the checkers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass
class CheckResult:
    passed: bool
    diff: Any = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed
