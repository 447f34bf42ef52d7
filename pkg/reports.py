"""
Verification reports

Each check certifies one claim by sampling and records the worst observed
error, the tolerance and a verdict. Reports serialize to schema-stable JSON:
fixed key order, floats with 17 significant digits, records sorted by id.
"""
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from logging_config import get_logger

logger = get_logger(__name__)


class Verdict(Enum):
    """Outcome of a check"""
    PASS = "PASS"
    FAIL = "FAIL"
    WITNESS = "WITNESS"


@dataclass
class CheckRecord:
    """
    One certified claim

    Attributes:
        check_id: Stable identifier, e.g. "metrics.gauge_oracle"
        claim: Statement being corroborated
        trials: Number of sampled inputs
        max_error: Worst observed deviation (>= 0)
        tolerance: Acceptance threshold on max_error
        verdict: PASS, FAIL or WITNESS
        expected: Verdict that counts as success (PASS or WITNESS)
        witness: Serialized inputs for FAIL/WITNESS verdicts
        details: Extra observations (ratios, counts)
    """
    check_id: str
    claim: str
    trials: int
    max_error: float
    tolerance: float
    verdict: Verdict
    expected: Verdict = Verdict.PASS
    witness: Optional[Dict[str, Any]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.max_error = max(float(self.max_error), 0.0) if not math.isnan(self.max_error) else float("inf")
        if self.verdict in (Verdict.FAIL, Verdict.WITNESS) and self.witness is None:
            self.witness = {"reason": "no violating input recorded"}

    @property
    def passed(self) -> bool:
        return self.verdict == self.expected

    @classmethod
    def from_error(
        cls,
        check_id: str,
        claim: str,
        trials: int,
        max_error: float,
        tolerance: float,
        witness: Optional[Dict[str, Any]] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> "CheckRecord":
        """Expected-PASS check: PASS iff max_error <= tolerance"""
        ok = max_error <= tolerance
        return cls(
            check_id=check_id,
            claim=claim,
            trials=trials,
            max_error=max_error,
            tolerance=tolerance,
            verdict=Verdict.PASS if ok else Verdict.FAIL,
            witness=None if ok else witness,
            details=details or {},
        )

    @classmethod
    def from_witness(
        cls,
        check_id: str,
        claim: str,
        trials: int,
        max_error: float,
        tolerance: float,
        witness: Optional[Dict[str, Any]],
        details: Optional[Dict[str, Any]] = None,
    ) -> "CheckRecord":
        """Expected-WITNESS check: succeeds only when a counterexample was found"""
        found = witness is not None
        return cls(
            check_id=check_id,
            claim=claim,
            trials=trials,
            max_error=max_error,
            tolerance=tolerance,
            verdict=Verdict.WITNESS if found else Verdict.FAIL,
            expected=Verdict.WITNESS,
            witness=witness if found else {"reason": f"no counterexample in {trials} trials"},
            details=details or {},
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "checkId": self.check_id,
            "claim": self.claim,
            "trials": self.trials,
            "maxError": self.max_error,
            "tolerance": self.tolerance,
            "verdict": self.verdict.value,
            "expected": self.expected.value,
            "passed": self.passed,
            "witness": self.witness,
            "details": self.details,
        }


class VerificationReport:
    """Collection of check records with pass/fail aggregation"""

    def __init__(self, records: Optional[List[CheckRecord]] = None):
        self.records: List[CheckRecord] = list(records or [])

    def add(self, record: CheckRecord) -> None:
        level = "info" if record.passed else "warning"
        getattr(logger, level)(
            f"{record.check_id}: {record.verdict.value} (max error {record.max_error:.3e}, tol {record.tolerance:.1e})"
        )
        self.records.append(record)

    def extend(self, other: "VerificationReport") -> None:
        for record in other.records:
            self.add(record)

    def __iter__(self):
        return iter(self.sorted_records())

    def __len__(self) -> int:
        return len(self.records)

    def get(self, check_id: str) -> CheckRecord:
        for record in self.records:
            if record.check_id == check_id:
                return record
        raise KeyError(check_id)

    def sorted_records(self) -> List[CheckRecord]:
        return sorted(self.records, key=lambda r: r.check_id)

    @property
    def passed_count(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @property
    def failed_count(self) -> int:
        return len(self.records) - self.passed_count

    @property
    def all_passed(self) -> bool:
        return self.failed_count == 0

    def to_dict(self, config: Dict[str, Any]) -> Dict[str, Any]:
        return {
            "config": config,
            "checks": [r.to_dict() for r in self.sorted_records()],
            "summary": {"passed": self.passed_count, "failed": self.failed_count},
        }

    def to_json(self, config: Dict[str, Any], indent: Optional[int] = 2) -> str:
        return dumps_stable(self.to_dict(config), indent=indent)

    def to_frame(self) -> pd.DataFrame:
        """Tabular view for terminal output"""
        rows = [
            {
                "check": r.check_id,
                "verdict": r.verdict.value,
                "expected": r.expected.value,
                "max_error": r.max_error,
                "tolerance": r.tolerance,
                "trials": r.trials,
            }
            for r in self.sorted_records()
        ]
        return pd.DataFrame(rows, columns=["check", "verdict", "expected", "max_error", "tolerance", "trials"])


def format_float(value: float) -> str:
    """17 significant digits; JSON tokens for non-finite values"""
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    text = format(value, ".17g")
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def _encode(obj: Any, indent: Optional[int], level: int) -> str:
    if isinstance(obj, Enum):
        obj = obj.value
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)

    pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
    close = "" if indent is None else "\n" + " " * (indent * level)
    sep = ", " if indent is None else ","
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{" + sep.join(items) + close + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}{_encode(v, indent, level + 1)}" for v in obj]
        return "[" + sep.join(items) + close + "]"
    raise TypeError(f"Cannot serialize {type(obj).__name__}")


def dumps_stable(obj: Any, indent: Optional[int] = 2) -> str:
    """Serialize with insertion-ordered keys and 17-significant-digit floats"""
    return _encode(obj, indent, 0) + "\n"
