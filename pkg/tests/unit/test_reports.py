"""
Unit tests for verification reports

Test Coverage:
- TC-REP-001: Check records and verdicts
- TC-REP-002: Report aggregation
- TC-REP-003: Stable JSON serialization
- TC-REP-004: Tabular view
"""
import json
import math

import numpy as np
import pytest

from reports import CheckRecord, Verdict, VerificationReport, dumps_stable, format_float

pytestmark = [pytest.mark.unit, pytest.mark.reports]


def record(check_id="metrics.symmetry", error=0.0, tol=1e-9):
    return CheckRecord.from_error(check_id, "claim", 3, error, tol, witness={"a": [1.0]})


class TestCheckRecord:
    """TC-REP-001: Check records and verdicts"""

    def test_pass_within_tolerance(self):
        r = record(error=1e-10)
        assert r.verdict == Verdict.PASS
        assert r.passed
        assert r.witness is None

    def test_fail_keeps_witness(self):
        r = record(error=1e-3)
        assert r.verdict == Verdict.FAIL
        assert not r.passed
        assert r.witness == {"a": [1.0]}

    def test_witness_found(self):
        r = CheckRecord.from_witness("x.y", "claim", 2, 0.5, 1e-9, witness={"b": 2})
        assert r.verdict == Verdict.WITNESS
        assert r.expected == Verdict.WITNESS
        assert r.passed

    def test_witness_missing_fails(self):
        r = CheckRecord.from_witness("x.y", "claim", 2, 0.0, 1e-9, witness=None)
        assert r.verdict == Verdict.FAIL
        assert not r.passed
        assert "no counterexample" in r.witness["reason"]

    def test_nan_error_becomes_infinite(self):
        r = CheckRecord("x.y", "claim", 1, float("nan"), 1e-9, Verdict.FAIL)
        assert math.isinf(r.max_error)
        assert r.witness == {"reason": "no violating input recorded"}

    def test_to_dict_key_order(self):
        keys = list(record().to_dict())
        assert keys == ["checkId", "claim", "trials", "maxError", "tolerance", "verdict",
                        "expected", "passed", "witness", "details"]


class TestReport:
    """TC-REP-002: Report aggregation"""

    def test_counts(self):
        report = VerificationReport([record("a.b"), record("c.d", error=1.0)])
        assert len(report) == 2
        assert report.passed_count == 1
        assert report.failed_count == 1
        assert not report.all_passed

    def test_extend_and_get(self):
        first = VerificationReport([record("a.b")])
        second = VerificationReport([record("c.d")])
        first.extend(second)
        assert first.get("c.d").check_id == "c.d"
        with pytest.raises(KeyError):
            first.get("missing")

    def test_iterates_sorted(self):
        report = VerificationReport()
        report.add(record("z.last"))
        report.add(record("a.first"))
        assert [r.check_id for r in report] == ["a.first", "z.last"]

    def test_empty_report_passes(self):
        assert VerificationReport().all_passed


class TestSerialization:
    """TC-REP-003: Stable JSON serialization"""

    def test_seventeen_digits(self):
        assert format_float(0.1) == "0.10000000000000001"
        assert format_float(2.0) == "2.0"
        assert format_float(1e22) == "1e+22"

    def test_non_finite(self):
        assert format_float(float("inf")) == "Infinity"
        assert format_float(float("-inf")) == "-Infinity"
        assert format_float(float("nan")) == "NaN"

    def test_parses_back(self):
        report = VerificationReport([record("b.b"), record("a.a", error=2.0)])
        data = json.loads(report.to_json({"algebra": "rn:3", "seed": 0}))
        assert list(data) == ["config", "checks", "summary"]
        assert [c["checkId"] for c in data["checks"]] == ["a.a", "b.b"]
        assert data["summary"] == {"passed": 1, "failed": 1}
        assert data["checks"][0]["maxError"] == 2.0

    def test_identical_output_for_identical_reports(self):
        config = {"algebra": "sym:2", "tol": 1e-8}
        first = VerificationReport([record("a.a", error=1 / 3)]).to_json(config)
        second = VerificationReport([record("a.a", error=1 / 3)]).to_json(config)
        assert first == second

    def test_numpy_values(self):
        text = dumps_stable({"v": np.array([1.0, 2.5]), "n": np.int64(3), "b": np.bool_(True)}, indent=None)
        assert text == '{"v": [1.0, 2.5], "n": 3, "b": true}\n'

    def test_enum_and_none(self):
        assert dumps_stable({"verdict": Verdict.PASS, "witness": None}, indent=None) == \
            '{"verdict": "PASS", "witness": null}\n'

    def test_empty_containers(self):
        assert dumps_stable({"a": [], "b": {}}, indent=None) == '{"a": [], "b": {}}\n'

    def test_unsupported_type(self):
        with pytest.raises(TypeError):
            dumps_stable({"x": object()})


class TestFrame:
    """TC-REP-004: Tabular view"""

    def test_columns(self):
        frame = VerificationReport([record("b.b"), record("a.a")]).to_frame()
        assert list(frame.columns) == ["check", "verdict", "expected", "max_error", "tolerance", "trials"]
        assert frame["check"].tolist() == ["a.a", "b.b"]

    def test_empty(self):
        assert VerificationReport().to_frame().empty
