"""
Integration tests for the conecheck command line

Test Coverage:
- TC-CLI-001: verify exit codes and report output
- TC-CLI-002: Deterministic JSON reports
- TC-CLI-003: metric and decompose subcommands
- TC-CLI-004: Usage errors

Success Criteria:
- Exit code 0 when every check meets its expected verdict, 2 on usage errors
- Identical arguments produce byte-identical reports
- stdout carries only the report; diagnostics go to stderr
"""
import json
import logging
import math

import pytest

from conecheck import EXIT_FAILED, EXIT_OK, EXIT_USAGE, ConeCheck, main
from logging_config import ROOT_LOGGER
from reports import CheckRecord, VerificationReport
from suites import SuiteRegistry
from validation import validate_run_config

pytestmark = [pytest.mark.integration, pytest.mark.cli]


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in logger.handlers[:]:
        handler.close()
        logger.removeHandler(handler)


SMALL_RUN = ["verify", "--algebra", "rn:1 x rn:1", "--trials", "2", "--suites", "metrics,means", "--r-max", "4"]


class TestVerify:
    """TC-CLI-001: verify exit codes and report output"""

    async def test_passing_run(self, capsys):
        code = await main(SMALL_RUN)
        captured = capsys.readouterr()
        assert code == EXIT_OK

        report = json.loads(captured.out)
        assert report["config"] == {
            "algebra": "rn:1 x rn:1",
            "seed": 0,
            "trials": 2,
            "tol": 1e-8,
            "suites": ["metrics", "means"],
            "rMax": 4,
        }
        ids = [c["checkId"] for c in report["checks"]]
        assert ids == sorted(ids)
        assert all(c["passed"] for c in report["checks"])
        assert report["summary"] == {"passed": len(ids), "failed": 0}

    async def test_report_written_to_file(self, tmp_path, capsys):
        out = tmp_path / "reports" / "small.json"
        code = await main(SMALL_RUN + ["--out", str(out)])
        captured = capsys.readouterr()
        assert code == EXIT_OK
        assert out.exists()
        assert json.loads(out.read_text())["summary"]["failed"] == 0
        assert captured.out.startswith("passed: ")

    async def test_pretty_table(self, capsys):
        code = await main(SMALL_RUN + ["--pretty"])
        captured = capsys.readouterr()
        assert code == EXIT_OK
        assert "ConeCheck report for rn:1 x rn:1" in captured.out
        assert "metrics.symmetry" in captured.out

    async def test_failed_check_exits_one(self, capsys):
        def failing_suite(ctx):
            report = VerificationReport()
            report.add(CheckRecord.from_error("fake.broken", "never holds", 1, 1.0, 1e-9))
            return report

        registry = SuiteRegistry()
        registry.register_suite("metrics", failing_suite)
        app = ConeCheck(registry=registry)
        config = validate_run_config(algebra="rn:2", suites=["metrics"], trials=1)
        code = await app.cmd_verify(config)
        report = json.loads(capsys.readouterr().out)
        assert code == EXIT_FAILED
        assert report["summary"] == {"passed": 0, "failed": 1}
        assert report["checks"][0]["witness"] == {"reason": "no violating input recorded"}

    async def test_single_suite_on_spin_factor(self, capsys):
        code = await main(["verify", "--algebra", "spin:3", "--trials", "2", "--suites", "metrics"])
        assert code == EXIT_OK
        config = json.loads(capsys.readouterr().out)["config"]
        assert config["suites"] == ["metrics"]


class TestDeterminism:
    """TC-CLI-002: Deterministic JSON reports"""

    async def test_identical_runs_identical_bytes(self, capsys):
        argv = SMALL_RUN + ["--seed", "17"]
        assert await main(argv) == EXIT_OK
        first = capsys.readouterr().out
        assert await main(argv) == EXIT_OK
        second = capsys.readouterr().out
        assert first == second

    async def test_seed_changes_report(self, capsys):
        await main(SMALL_RUN + ["--seed", "1"])
        first = json.loads(capsys.readouterr().out)
        await main(SMALL_RUN + ["--seed", "2"])
        second = json.loads(capsys.readouterr().out)
        assert first["config"]["seed"] != second["config"]["seed"]
        assert [c["checkId"] for c in first["checks"]] == [c["checkId"] for c in second["checks"]]


class TestPointCommands:
    """TC-CLI-003: metric and decompose subcommands"""

    async def test_metric_worked_example(self, capsys):
        code = await main(["metric", "--algebra", "rn:3", "--a", "1,2,4", "--b", "2,1,1"])
        lines = capsys.readouterr().out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "d_T = 1.38629436112"
        assert lines[1] == "d_H = 2.07944154168"
        assert lines[2].startswith("d_R = 1.697")

    async def test_metric_same_point_is_exactly_zero(self, capsys):
        code = await main(["metric", "--algebra", "herm:2", "--a", "2,0.3,0.1,1", "--b", "2,0.3,0.1,1"])
        lines = capsys.readouterr().out.splitlines()
        assert code == EXIT_OK
        assert lines == ["d_T = 0", "d_H = 0", "d_R = 0"]

    async def test_metric_scaled_point_hilbert_zero(self, capsys):
        code = await main(["metric", "--algebra", "sym:3", "--a", "3,0.2,0.1,2,0.4,1", "--b", "6,0.4,0.2,4,0.8,2",
                           "--kind", "hilbert"])
        assert code == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["d_H = 0"]

    async def test_metric_single_kind_json(self, capsys):
        code = await main(["metric", "--algebra", "rn:3", "--a", "1,2,4", "--b", "2,1,1",
                           "--kind", "hilbert", "--json"])
        data = json.loads(capsys.readouterr().out)
        assert code == EXIT_OK
        assert data["algebra"] == "rn:3"
        assert list(data["distances"]) == ["hilbert"]
        assert data["distances"]["hilbert"] == pytest.approx(3 * math.log(2))

    async def test_decompose_spin(self, capsys):
        code = await main(["decompose", "--algebra", "spin:3", "--point", "2,1,0"])
        lines = capsys.readouterr().out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == "eigenvalues: 1, 3"
        assert lines[1] == "p1: 0.5, -0.5, 0"
        assert lines[2] == "p2: 0.5, 0.5, 0"
        assert lines[-1].startswith("residual: ")

    async def test_decompose_json(self, capsys):
        code = await main(["decompose", "--algebra", "sym:2", "--point", "3,0,1", "--json"])
        data = json.loads(capsys.readouterr().out)
        assert code == EXIT_OK
        assert data["eigenvalues"] == pytest.approx([1.0, 3.0])
        assert len(data["frame"]) == 2
        assert data["residual"] < 1e-12


class TestUsageErrors:
    """TC-CLI-004: Usage errors"""

    @pytest.mark.parametrize("argv", [
        ["verify", "--algebra", "sym:3 + spin:4"],
        ["verify", "--algebra", "spin:2"],
        ["verify", "--algebra", "spin:3", "--suites", "blowup"],
        ["verify", "--algebra", "sym:3", "--suites", "products"],
        ["verify", "--algebra", "rn:3", "--suites", "speed"],
        ["verify", "--algebra", "rn:3", "--trials", "0"],
        ["metric", "--algebra", "rn:3", "--a", "1,2,-4", "--b", "1,1,1"],
        ["metric", "--algebra", "rn:3", "--a", "1,2", "--b", "1,1,1"],
        ["decompose", "--algebra", "herm:13", "--point", "1"],
    ])
    async def test_exit_two(self, argv, capsys):
        code = await main(argv)
        captured = capsys.readouterr()
        assert code == EXIT_USAGE
        assert "Error: " in captured.err
        assert captured.out == ""

    async def test_missing_algebra_is_argparse_error(self):
        with pytest.raises(SystemExit) as exc_info:
            await main(["verify"])
        assert exc_info.value.code == 2
