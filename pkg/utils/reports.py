"""Verification and run reports, and their conversion to JSON-ready values."""
import dataclasses
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import numpy as np

# Constants
OUTCOME_PASS = "pass"
OUTCOME_FAIL = "fail"
OUTCOME_INFO = "info"


def rational_to_dict(value: Fraction) -> Dict[str, Any]:
    return {"num": value.numerator, "den": value.denominator, "float": float(value)}


def to_jsonable(obj: Any) -> Any:
    """Recursively convert report payloads into plain JSON values.

    Exact rationals become {"num", "den", "float"}; anything exposing
    ``to_fraction()`` (the dyadic type) is treated the same way.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return rational_to_dict(obj)
    if hasattr(obj, "to_fraction"):
        return rational_to_dict(obj.to_fraction())
    if isinstance(obj, np.generic):
        return to_jsonable(obj.item())
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        if hasattr(obj, "to_dict"):
            return to_jsonable(obj.to_dict())
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [to_jsonable(x) for x in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    raise TypeError(f"Cannot serialise object of type {type(obj).__name__}")


@dataclass
class CheckReport:
    """Outcome of one verification. A failed report always carries a witness."""

    name: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    witnesses: List[Any] = field(default_factory=list)

    def __post_init__(self):
        if not self.passed and not self.witnesses:
            raise ValueError(f"Failed check {self.name!r} must carry at least one witness")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "details": self.details,
            "witnesses": self.witnesses,
        }


@dataclass
class RunReport:
    """What one CLI command did. Timing is kept out of ``to_dict``."""

    command: str
    parameters: Dict[str, Any]
    outcome: str = OUTCOME_INFO
    witnesses: List[Any] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)
    timing: Optional[float] = None

    def __post_init__(self):
        if self.outcome not in (OUTCOME_PASS, OUTCOME_FAIL, OUTCOME_INFO):
            raise ValueError(f"Unknown outcome {self.outcome!r}")

    @classmethod
    def from_checks(cls, command: str, parameters: Dict[str, Any],
                    checks: List[CheckReport], data: Optional[Dict[str, Any]] = None) -> "RunReport":
        failed = [c for c in checks if not c.passed]
        witnesses = [{"check": c.name, "witness": c.witnesses[0]} for c in failed]
        payload = {"checks": checks}
        if data:
            payload.update(data)
        return cls(
            command=command,
            parameters=parameters,
            outcome=OUTCOME_FAIL if failed else OUTCOME_PASS,
            witnesses=witnesses,
            data=payload,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "outcome": self.outcome,
            "witnesses": self.witnesses,
            "data": self.data,
        }
